#pragma once

#include <vector>

#include "kcalc/poly.hpp"

namespace kcalc {

inline constexpr unsigned kDefaultTruncation = 8;

// Polynomial in the elementary symmetric functions e_1, e_2, ... with
// deg e_i = i. Variable index 0 is e_1.
struct SymPoly {
  Poly poly;

  unsigned degree() const { return poly.degree(Grading::Elementary); }
  friend bool operator==(const SymPoly&, const SymPoly&) = default;
};

// Polynomial in root variables x_1..x_m truncated at total degree N.
struct RootExpansion {
  std::size_t variables = 0;
  unsigned truncation = kDefaultTruncation;
  Poly poly;

  friend bool operator==(const RootExpansion&, const RootExpansion&) = default;
};

// sigma_i(x_1..x_m) as a polynomial; zero for i > m, one for i = 0.
Poly elementary_symmetric(std::size_t i, std::size_t m);

// p_k in the e-basis via p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k.
SymPoly newton_power_sum(unsigned k);
// p_1 .. p_k in one pass (index 0 holds p_1).
std::vector<SymPoly> newton_power_sums(unsigned k);

// Substitutes e_i -> values[i-1] (zero past the end), truncating products
// at total degree `bound` in the value variables.
Poly evaluate_elementary(const SymPoly& f, const std::vector<Poly>& values, unsigned bound);

RootExpansion expand_in_roots(const SymPoly& f, std::size_t m, unsigned bound = kDefaultTruncation);

bool is_symmetric(const RootExpansion& p);

// Greedy leading-term reduction. Throws DomainError("not_symmetric").
SymPoly symmetrize_to_elementary(const RootExpansion& p);

}  // namespace kcalc
