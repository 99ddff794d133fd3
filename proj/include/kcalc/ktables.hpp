#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcalc/grothendieck.hpp"

namespace kcalc {

// Bott periodicity: K^n = K^{n-2}, so every degree reduces to 0 or 1.
int reduce_degree(long n);

// Reduced group K~^{-i}(S^m), i in {0, 1}: Z when i + m is even, else 0.
AbelianGroup k_sphere(int i, unsigned long m);

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;
};

std::optional<PrimePower> as_prime_power(const Integer& q);

// K_n(F_q): Z for n = 0, 0 for even n > 0, Z/(q^{(n+1)/2} - 1) for odd n.
AbelianGroup k_finite_field(unsigned long n, const Integer& q);

enum class StableFamily { Unitary, SpecialOrthogonal };
StableFamily parse_stable_family(const std::string& tag);

// pi_i of the stable unitary / special orthogonal group. The orthogonal
// table covers the residues i = 1..7 mod 8; nullopt for i = 0 mod 8.
std::optional<AbelianGroup> stable_homotopy(StableFamily family, unsigned long i);

// dim_Q K_n(Z) (x) Q: 1 for n = 0 and for n = 1 mod 4 with n >= 5.
unsigned k_integers_rank(unsigned long n);

struct HopfReport {
  unsigned long bound = 0;
  std::vector<unsigned long> solutions;
  // (n, v_2(3^n - 1)) for the first few n.
  std::vector<std::pair<unsigned long, unsigned long>> v2_table;
  // Every n <= bound was compared against the closed form.
  bool closed_form_agrees = true;
  std::optional<unsigned long> first_mismatch;

  friend bool operator==(const HopfReport&, const HopfReport&) = default;
};

// 2-adic valuation of 3^n - 1 by the closed form: 1 for odd n,
// v_2(n) + 2 for even n.
unsigned long v2_closed_form(unsigned long n);

// Exhaustive exact search of n <= bound with 2^n | 3^n - 1.
HopfReport hopf_search(unsigned long bound, std::size_t table_size = 16);

// 2^n (2^n - 1) b == 3^n (3^n - 1) a, exactly.
bool hopf_constraint(unsigned long n, const Integer& a, const Integer& b);

// Whether some odd a admits an integer b in hopf_constraint.
bool hopf_odd_a_admissible(unsigned long n);

}  // namespace kcalc
