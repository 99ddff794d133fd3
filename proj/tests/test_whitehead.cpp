#include <random>

#include "helpers.hpp"
#include "kcalc/linalg.hpp"
#include "kcalc/whitehead.hpp"

using namespace kcalc;
using test::mat;

namespace {

// Multiplicative order of g mod p by brute force.
unsigned long order_mod(unsigned long g, unsigned long p) {
  unsigned long x = g % p, k = 1;
  while (x != 1) {
    x = x * g % p;
    ++k;
  }
  return k;
}

// Multiplicative order in F_p[x]/(x^2 + c1 x + c0) by brute force.
unsigned long order_quadratic(FieldElement g, unsigned long p, unsigned long c0, unsigned long c1) {
  g.resize(2, 0);
  auto mul = [&](const FieldElement& u, const FieldElement& v) {
    // (u0 + u1 x)(v0 + v1 x), x^2 = -c1 x - c0
    const unsigned long a = u[0] * v[0] % p;
    const unsigned long b = (u[0] * v[1] + u[1] * v[0]) % p;
    const unsigned long c = u[1] * v[1] % p;
    return FieldElement{(a + (p - c0) * c) % p, (b + (p - c1) * c) % p};
  };
  FieldElement x = g;
  unsigned long k = 1;
  while (!(x[0] == 1 && x[1] == 0)) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("an elementary matrix is a single transvection") {
  const Matrix a = mat({{1, 5}, {0, 1}}, Ring::rationals());
  const auto f = transvection_factorize(a);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0] == Transvection{0, 1, 5});
  CHECK(f.diagonal.is_identity());
  CHECK(f.product(Ring::rationals()) == a);
}

TEST_CASE("rotation by a quarter turn") {
  const Matrix a = mat({{0, 1}, {-1, 0}}, Ring::rationals());
  const auto f = transvection_factorize(a);
  CHECK(f.diagonal.is_identity());
  CHECK(f.product(Ring::rationals()) == a);
  for (const auto& t : f.factors) CHECK(t.i != t.j);
  const std::vector<Transvection> expected{{0, 1, 1}, {1, 0, -1}, {0, 1, 1}};
  CHECK(f.factors == expected);
}

TEST_CASE("random GL_2(F_7) round trips") {
  const Ring f7 = Ring::prime_field(7);
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<long> entry(0, 6);
  int tested = 0;
  while (tested < 50) {
    Matrix a(2, 2, f7);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) a.set(r, c, entry(gen));
    if (determinant(a) == 0) continue;
    ++tested;
    const auto f = transvection_factorize(a);
    CHECK(f.product(f7) == a);
    CHECK(f.diagonal(0, 0) == determinant(a));
  }
}

TEST_CASE("singular input to the factorization") {
  CHECK_DOMAIN_ERROR(transvection_factorize(mat({{1, 2}, {2, 4}}, Ring::rationals())), "singular_matrix");
}

TEST_CASE("Whitehead block identity") {
  const Ring q = Ring::rationals();
  const auto same = whitehead_identity(Matrix::identity(2, q), Matrix::identity(2, q));
  CHECK(same.holds);
  CHECK(same.product.is_identity());
  CHECK(same.factors.size() == 4);

  const auto scalars = whitehead_identity(mat({{2}}, q), mat({{3}}, q));
  CHECK(scalars.holds);
  CHECK(scalars.product.is_identity());

  const Matrix a = mat({{1, 1}, {0, 1}}, q), b = mat({{2, 0}, {1, 1}}, q);
  const auto w = whitehead_identity(a, b);
  CHECK(w.holds);
  CHECK(w.product == w.expected);
  CHECK(w.expected.block(0, 0, 2, 2) == a * b * inverse(a) * inverse(b));

  // commuting pair: the product is the identity
  const Matrix c = mat({{2, 0}, {0, 3}}, q), d = mat({{5, 0}, {0, 7}}, q);
  CHECK(whitehead_identity(c, d).product.is_identity());

  CHECK_DOMAIN_ERROR(whitehead_identity(mat({{1, 2}, {2, 4}}, q), Matrix::identity(2, q)), "singular_input");
}

TEST_CASE("Steinberg relations hold in the elementary group") {
  CHECK(steinberg_check(3, 20, Ring::integers(), 1).violations.empty());
  CHECK(steinberg_check(4, 10, Ring::prime_field(5), 2).violations.empty());
  const auto r = steinberg_check(3, 5, Ring::integers(), 3);
  CHECK(r.commutators_checked > 0);
  CHECK(r.additivity_checked > 0);
  CHECK_THROWS_AS(steinberg_check(2, 5, Ring::integers(), 1), DomainError);
}

TEST_CASE("K_1 of prime fields") {
  CHECK(k1_finite_field(2).group.is_trivial());
  const auto f7 = k1_finite_field(7);
  CHECK(f7.group == AbelianGroup::cyclic(6));
  CHECK(f7.generator == FieldElement{3});
  const auto f5 = k1_finite_field(5);
  CHECK(f5.group == AbelianGroup::cyclic(4));
  CHECK(f5.generator == FieldElement{2});
  for (unsigned long p : {3ul, 11ul, 13ul, 101ul}) {
    const auto r = k1_finite_field(p);
    CHECK(order_mod(r.generator.at(0), p) == p - 1);
  }
}

TEST_CASE("K_1 of extension fields") {
  const auto f4 = k1_finite_field(4, std::vector<unsigned long>{1, 1, 1});
  CHECK(f4.group == AbelianGroup::cyclic(3));
  CHECK(order_quadratic(f4.generator, 2, 1, 1) == 3);
  const auto f9 = k1_finite_field(9, std::vector<unsigned long>{1, 0, 1});
  CHECK(f9.group == AbelianGroup::cyclic(8));
  CHECK(order_quadratic(f9.generator, 3, 1, 0) == 8);
  CHECK_DOMAIN_ERROR(k1_finite_field(9), "missing_modulus");
  CHECK_DOMAIN_ERROR(k1_finite_field(4, std::vector<unsigned long>{1, 0, 1}), "invalid_modulus");
  CHECK_DOMAIN_ERROR(k1_finite_field(6), "not_prime_power");
}
