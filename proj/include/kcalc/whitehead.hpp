#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcalc/exact.hpp"
#include "kcalc/grothendieck.hpp"

namespace kcalc {

// e^a_ij = 1 + a e_ij, i != j (0-based indices).
struct Transvection {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational a;

  Matrix matrix(std::size_t n, const Ring& ring) const;
  Transvection inverse(const Ring& ring) const { return {i, j, ring.neg(a)}; }

  friend bool operator==(const Transvection&, const Transvection&) = default;
};

// m <- e^a_ij * m, i.e. row_i += a * row_j.
void apply_left(const Transvection& t, Matrix& m);

struct FactorizationResult {
  std::vector<Transvection> factors;
  Matrix diagonal;  // diag(d, 1, ..., 1), d = det of the input

  Matrix product(const Ring& ring) const;

  friend bool operator==(const FactorizationResult&, const FactorizationResult&) = default;
};

// Writes A = e_1 e_2 ... e_k diag(det A, 1, ..., 1) using row transvections
// only. Throws DomainError("singular_matrix").
FactorizationResult transvection_factorize(const Matrix& a);

struct WhiteheadIdentity {
  // diag(a, a^-1, 1), diag(b, 1, b^-1), diag(a^-1, a, 1), diag(b^-1, 1, b)
  std::vector<Matrix> factors;
  Matrix product;
  Matrix expected;  // diag(a b a^-1 b^-1, 1, 1)
  bool holds = false;
};

WhiteheadIdentity whitehead_identity(const Matrix& a, const Matrix& b);

struct SteinbergViolation {
  std::string relation;
  std::size_t i, j, k, l;
  Rational a, b;

  friend bool operator==(const SteinbergViolation&, const SteinbergViolation&) = default;
};

struct SteinbergReport {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t commutators_checked = 0;
  std::size_t additivity_checked = 0;
  std::vector<SteinbergViolation> violations;

  friend bool operator==(const SteinbergReport&, const SteinbergReport&) = default;
};

// Commutator table [e^a_ij, e^b_kl] on concrete matrices plus
// e^a_ij e^b_ij = e^{a+b}_ij, for random a, b and every index pattern
// (patterns with j = k and i = l have no closed form and are skipped).
// Over Z, a and b are drawn from [-10, 10].
SteinbergReport steinberg_check(std::size_t n, std::size_t trials, const Ring& ring, std::uint64_t seed);

// Element of F_q: coefficients of a polynomial in the modulus generator,
// constant term first. Prime fields use a single coefficient.
using FieldElement = std::vector<unsigned long>;

struct K1Result {
  AbelianGroup group;
  FieldElement generator;

  friend bool operator==(const K1Result&, const K1Result&) = default;
};

// K_1(F_q) = F_q^x with a verified primitive element. For q = p^e, e > 1,
// `modulus` must be a monic irreducible polynomial of degree e over F_p
// (coefficients constant term first).
K1Result k1_finite_field(const Integer& q, const std::optional<std::vector<unsigned long>>& modulus = {});

}  // namespace kcalc
