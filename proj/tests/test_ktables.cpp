#include "helpers.hpp"
#include "kcalc/ktables.hpp"

using namespace kcalc;

namespace {

// v_2 by repeated halving; independent of the closed form.
unsigned long v2_direct(unsigned long n) {
  Integer x;
  mpz_ui_pow_ui(x.get_mpz_t(), 3, n);
  x -= 1;
  unsigned long v = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("Bott periodicity reduces degrees") {
  CHECK(reduce_degree(0) == 0);
  CHECK(reduce_degree(-5) == 1);
  CHECK(reduce_degree(4) == 0);
  CHECK(reduce_degree(7) == 1);
}

TEST_CASE("reduced K of spheres") {
  CHECK(k_sphere(0, 2) == AbelianGroup::free(1));
  CHECK(k_sphere(0, 3).is_trivial());
  CHECK(k_sphere(1, 3) == AbelianGroup::free(1));
  CHECK(k_sphere(1, 2).is_trivial());
  // shifting both i and m by one is the suspension isomorphism
  for (unsigned long m = 1; m < 12; ++m) CHECK(k_sphere(0, m) == k_sphere(1, m + 1));
}

TEST_CASE("K groups of finite fields") {
  CHECK(k_finite_field(0, 5) == AbelianGroup::free(1));
  CHECK(k_finite_field(3, 4) == AbelianGroup::cyclic(15));
  CHECK(k_finite_field(5, 2) == AbelianGroup::cyclic(7));
  CHECK(k_finite_field(1, 9) == AbelianGroup::cyclic(8));
  CHECK(k_finite_field(2, 7).is_trivial());
  CHECK(k_finite_field(1, 2).is_trivial());
  CHECK_DOMAIN_ERROR(k_finite_field(1, 6), "not_prime_power");
  CHECK_DOMAIN_ERROR(k_finite_field(1, 1), "not_prime_power");
}

TEST_CASE("prime power detection") {
  const auto pp = as_prime_power(Integer(343));
  REQUIRE(pp.has_value());
  CHECK(pp->prime == 7);
  CHECK(pp->exponent == 3);
  CHECK_FALSE(as_prime_power(Integer(12)).has_value());
}

TEST_CASE("stable homotopy of U and SO") {
  const auto U = StableFamily::Unitary, SO = StableFamily::SpecialOrthogonal;
  CHECK(stable_homotopy(U, 5) == AbelianGroup::free(1));
  CHECK(stable_homotopy(U, 4) == AbelianGroup::trivial());
  CHECK(stable_homotopy(SO, 3) == AbelianGroup::free(1));
  CHECK(stable_homotopy(SO, 7) == AbelianGroup::free(1));
  CHECK(stable_homotopy(SO, 1) == AbelianGroup::cyclic(2));
  CHECK(stable_homotopy(SO, 2).value().is_trivial());
  CHECK_FALSE(stable_homotopy(SO, 8).has_value());
  CHECK(stable_homotopy(SO, 9) == stable_homotopy(SO, 1));
  CHECK(parse_stable_family("U") == U);
  CHECK_THROWS_AS(parse_stable_family("Sp"), DomainError);
}

TEST_CASE("rational ranks of K(Z)") {
  CHECK(k_integers_rank(0) == 1);
  CHECK(k_integers_rank(1) == 0);
  CHECK(k_integers_rank(5) == 1);
  CHECK(k_integers_rank(7) == 0);
  CHECK(k_integers_rank(9) == 1);
}

TEST_CASE("Hopf invariant one search") {
  const auto r = hopf_search(10);
  CHECK(r.solutions == std::vector<unsigned long>{1, 2, 4});
  CHECK(r.closed_form_agrees);
  CHECK(v2_closed_form(6) == 3);
  for (unsigned long n = 1; n <= 200; ++n) CHECK(v2_closed_form(n) == v2_direct(n));
  CHECK(hopf_search(4).solutions == hopf_search(1000).solutions);
}

TEST_CASE("Hopf constraint") {
  CHECK(hopf_constraint(1, 1, 3));
  CHECK(hopf_constraint(1, 0, 0));
  CHECK_FALSE(hopf_constraint(1, 1, 2));
  CHECK(hopf_odd_a_admissible(1));
  CHECK(hopf_odd_a_admissible(2));
  CHECK(hopf_odd_a_admissible(4));
  CHECK_FALSE(hopf_odd_a_admissible(3));
  CHECK_FALSE(hopf_odd_a_admissible(8));
}
