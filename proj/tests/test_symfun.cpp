#include "helpers.hpp"
#include "kcalc/symfun.hpp"

using namespace kcalc;

namespace {

// e-monomial e_1^a1 e_2^a2 ...
Poly e(std::initializer_list<unsigned> exps, const Rational& c = 1) {
  return Poly::monomial(Poly::Exponents(exps), c);
}

RootExpansion roots(std::size_t m, const Poly& p, unsigned n = kDefaultTruncation) {
  return {m, n, p};
}

Poly x(std::size_t i) { return Poly::variable(i); }

Poly mul(const Poly& a, const Poly& b) { return Poly::multiply(a, b, Grading::Total, 100); }

}  // namespace

TEST_CASE("low Newton power sums") {
  CHECK(newton_power_sum(1).poly == e({1}));
  CHECK(newton_power_sum(2).poly == e({2}) + e({0, 1}, -2));
  CHECK(newton_power_sum(3).poly == e({3}) + e({1, 1}, -3) + e({0, 0, 1}, 3));
  CHECK(newton_power_sum(4).poly ==
        e({4}) + e({2, 1}, -4) + e({0, 2}, 2) + e({1, 0, 1}, 4) + e({0, 0, 0, 1}, -4));
}

TEST_CASE("p_k has elementary degree k") {
  const auto ps = newton_power_sums(8);
  for (unsigned k = 1; k <= 8; ++k) {
    CHECK(ps[k - 1].degree() == k);
    CHECK(ps[k - 1] == newton_power_sum(k));
  }
}

TEST_CASE("p_0 is rejected") { CHECK_THROWS_AS(newton_power_sum(0), DomainError); }

TEST_CASE("expanding elementary functions in two roots") {
  CHECK(expand_in_roots(SymPoly{e({1})}, 2).poly == x(0) + x(1));
  CHECK(expand_in_roots(SymPoly{e({0, 1})}, 2).poly == mul(x(0), x(1)));
  CHECK(expand_in_roots(SymPoly{e({0, 0, 1})}, 2).poly.is_zero());
}

TEST_CASE("p_4 in four roots is the sum of fourth powers") {
  Poly expected;
  for (std::size_t i = 0; i < 4; ++i) {
    Poly::Exponents ex(i + 1, 0);
    ex[i] = 4;
    expected.add_term(ex, 1);
  }
  CHECK(expand_in_roots(newton_power_sum(4), 4).poly == expected);
}

TEST_CASE("symmetrize small examples") {
  CHECK(symmetrize_to_elementary(roots(2, x(0) + x(1))).poly == e({1}));
  const Poly sq = mul(x(0), x(0)) + mul(x(1), x(1));
  CHECK(symmetrize_to_elementary(roots(2, sq)).poly == e({2}) + e({0, 1}, -2));
  const Poly mixed = mul(mul(x(0), x(0)), x(1)) + mul(x(0), mul(x(1), x(1)));
  CHECK(symmetrize_to_elementary(roots(2, mixed)).poly == e({1, 1}));
  CHECK(symmetrize_to_elementary(roots(3, Poly::constant(5))).poly == Poly::constant(5));
}

TEST_CASE("non-symmetric input is rejected") {
  CHECK_FALSE(is_symmetric(roots(2, x(0))));
  CHECK_DOMAIN_ERROR(symmetrize_to_elementary(roots(2, x(0))), "not_symmetric");
  CHECK_DOMAIN_ERROR(symmetrize_to_elementary(roots(3, mul(x(0), x(1)) + x(2))), "not_symmetric");
}

TEST_CASE("truncation drops high degrees") {
  const auto p = expand_in_roots(newton_power_sum(5), 3, 4);
  CHECK(p.poly.is_zero());
}
