#include "helpers.hpp"
#include "kcalc/charclass.hpp"

using namespace kcalc;

namespace {

using VSB = VirtualSplitBundle;

VSB L(LineMonomial exps, const Integer& mult = 1) { return VSB::line(std::move(exps), mult); }

Poly x(std::size_t i, const Rational& c = 1) { return Poly::variable(i, c); }

// exp(root) truncated at degree n, built term by term.
Poly exp_series(const Poly& root, unsigned n) {
  Poly out = Poly::constant(1);
  Rational fact = 1;
  for (unsigned d = 1; d <= n; ++d) {
    fact *= d;
    out += Poly::power(root, d, Grading::Total, n) * (Rational(1) / fact);
  }
  return out;
}

}  // namespace

TEST_CASE("sums and tensor products of lines") {
  CHECK(bundle_tensor(L({1}), L({-1})) == VSB::trivial(1, 1));
  const VSB s = bundle_sum(L({1, 0}), L({0, 1}));
  VSB expected(2);
  expected.add({2, 0}, 1);
  expected.add({1, 1}, 2);
  expected.add({0, 2}, 1);
  CHECK(bundle_tensor(s, s) == expected);
  CHECK(bundle_sum(s, -s).is_zero());
  CHECK(s.dimension() == 2);
  CHECK(s.is_effective());
  CHECK_FALSE((-s).is_effective());
}

TEST_CASE("total Chern classes") {
  CHECK(total_chern(VSB::trivial(1, 3)).poly == Poly::constant(1));
  CHECK(total_chern(L({1})).poly == Poly::constant(1) + x(0));
  const auto c = total_chern(bundle_sum(L({1, 0}), L({0, 1})));
  CHECK(c.poly == Poly::constant(1) + x(0) + x(1) + Poly::monomial({1, 1}));
  // c(-L) = 1 - x + x^2 - ...
  const auto inv = total_chern(L({1}, -1), 4);
  CHECK(inv.poly == Poly::constant(1) - x(0) + Poly::monomial({2}) - Poly::monomial({3}) +
                        Poly::monomial({4}));
}

TEST_CASE("Chern character of a line") {
  const auto ch = chern_character(L({1}), 3);
  CHECK(ch.poly == Poly::constant(1) + x(0) + Poly::monomial({2}, Rational(1, 2)) +
                       Poly::monomial({3}, Rational(1, 6)));
}

TEST_CASE("Chern character matches exp of the roots") {
  VSB v(2);
  v.add({1, 0}, 2);
  v.add({-1, 2}, -1);
  v.add({0, 0}, 3);
  const Poly r1 = x(0);
  const Poly r2 = x(0, -1) + x(1, 2);
  const Poly expected = exp_series(r1, 6) * 2 - exp_series(r2, 6) + Poly::constant(3);
  CHECK(chern_character(v, 6).poly == expected);
}

TEST_CASE("lambda operations") {
  const VSB v = bundle_sum(L({1, 0}), L({0, 1}));
  CHECK(lambda_op(v, 0) == VSB::trivial(2, 1));
  CHECK(lambda_op(v, 1) == v);
  CHECK(lambda_op(v, 2) == L({1, 1}));
  CHECK(lambda_op(v, 3).is_zero());
  const auto series = lambda_series(L({1}), 3);
  REQUIRE(series.size() >= 2);
  CHECK(series[0] == VSB::trivial(1, 1));
  CHECK(series[1] == L({1}));
  // lambda_t(-L) = 1 / (1 + tL)
  CHECK(lambda_op(L({1}, -1), 2) == L({2}));
  CHECK(lambda_op(L({1}, -1), 3) == L({3}, -1));
}

TEST_CASE("three lines give elementary symmetric lambdas") {
  const VSB v = bundle_sum(bundle_sum(L({1, 0, 0}), L({0, 1, 0})), L({0, 0, 1}));
  VSB e2(3);
  e2.add({1, 1, 0}, 1);
  e2.add({1, 0, 1}, 1);
  e2.add({0, 1, 1}, 1);
  CHECK(lambda_op(v, 2) == e2);
  CHECK(lambda_op(v, 3) == L({1, 1, 1}));
}

TEST_CASE("symmetric powers") {
  CHECK(sym_op(L({1}), 0) == VSB::trivial(1, 1));
  for (unsigned k = 1; k <= 5; ++k) CHECK(sym_op(L({1}), k) == L({static_cast<long>(k)}));
  const VSB v = bundle_sum(L({1, 0}), L({0, 1}));
  VSB s2(2);
  s2.add({2, 0}, 1);
  s2.add({1, 1}, 1);
  s2.add({0, 2}, 1);
  CHECK(sym_op(v, 2) == s2);
}

TEST_CASE("Adams operations") {
  VSB v(2);
  v.add({1, 0}, 3);
  v.add({1, -1}, -2);
  CHECK(adams_op(v, 1) == v);
  CHECK(adams_op(L({1}), 4) == L({4}));
  CHECK(adams_op(adams_op(v, 2), 3) == adams_op(v, 6));
  CHECK(adams_op(VSB::trivial(2, 5), 7) == VSB::trivial(2, 5));
}

TEST_CASE("Adams via Newton from Chern data") {
  const VSB l = L({1});
  CHECK(adams_via_newton(chern_data(l, 6), 1, 6) == chern_character(l, 6));
  for (unsigned k = 2; k <= 4; ++k) {
    const auto c = adams_via_newton(chern_data(l, 6), k, 6);
    CHECK(c.component(2) == Poly::monomial({2}, Rational(k * k, 2)));
    CHECK(c == chern_character(adams_op(l, k), 6));
  }
}

TEST_CASE("cleared factorials are integral") {
  VSB v(2);
  v.add({2, -1}, 3);
  v.add({0, 1}, -1);
  const Poly p = clear_factorials(chern_character(v, 6));
  for (const auto& [exps, coeff] : p.terms()) CHECK(coeff.get_den() == 1);
}

TEST_CASE("K of spheres") {
  for (unsigned k = 1; k <= 5; ++k) CHECK(sphere_adams({1, 1, 0}, k) == SphereKElement{1, 1, 0});
  CHECK(sphere_adams({1, 0, 1}, 2) == SphereKElement{1, 0, 2});
  CHECK(sphere_adams({2, 0, 1}, 3) == SphereKElement{2, 0, 9});
  CHECK(sphere_product({2, 0, 1}, {2, 0, 1}) == SphereKElement{2, 0, 0});
  CHECK(sphere_product({1, 2, 3}, {1, 4, 5}) == SphereKElement{1, 8, 22});
  CHECK(sphere_sum({1, 2, 3}, {1, 4, 5}) == SphereKElement{1, 6, 8});
}
