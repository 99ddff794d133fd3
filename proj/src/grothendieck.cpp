#include "kcalc/grothendieck.hpp"

#include "kcalc/error.hpp"
#include "kcalc/linalg.hpp"

namespace kcalc {

AbelianGroup AbelianGroup::cyclic(const Integer& order) {
  if (order < 0) throw DomainError("invalid_argument", "negative cyclic order");
  if (order == 0) return free(1);
  if (order == 1) return trivial();
  return {0, {order}};
}

AbelianGroup AbelianGroup::from_invariant_factors(std::size_t free_rank,
                                                  const std::vector<Integer>& factors) {
  AbelianGroup g{free_rank, {}};
  for (const auto& d : factors) {
    if (d <= 0) throw DomainError("invalid_argument", "invariant factors must be positive");
    if (d == 1) continue;
    if (!g.torsion.empty() && d % g.torsion.back() != 0) {
      throw DomainError("invalid_argument", "invariant factors must form a divisibility chain");
    }
    g.torsion.push_back(d);
  }
  return g;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank == 1) {
    out = "Z";
  } else if (free_rank > 1) {
    out = "Z^" + std::to_string(free_rank);
  }
  for (const auto& d : torsion) {
    if (!out.empty()) out += " (+) ";
    out += "Z/" + d.get_str();
  }
  return out;
}

void MonoidPresentation::validate() const {
  for (const auto& rel : relations) {
    if (rel.lhs.size() != generators || rel.rhs.size() != generators) {
      throw DomainError("invalid_presentation", "relation length differs from generator count");
    }
    for (const auto* side : {&rel.lhs, &rel.rhs})
      for (const auto& x : *side)
        if (x < 0) throw DomainError("invalid_presentation", "monoid relations need entries >= 0");
  }
}

Matrix MonoidPresentation::relation_matrix() const {
  Matrix m(relations.size(), generators, Ring::integers());
  for (std::size_t r = 0; r < relations.size(); ++r)
    for (std::size_t c = 0; c < generators; ++c)
      m.set(r, c, Rational(relations[r].lhs[c] - relations[r].rhs[c]));
  return m;
}

AbelianGroup group_completion(const MonoidPresentation& m) {
  m.validate();
  auto factors = smith_normal_form(m.relation_matrix()).invariant_factors();
  return AbelianGroup::from_invariant_factors(m.generators - factors.size(), factors);
}

GroupElement canonical_form(const MonoidPresentation& m, const GroupElement& x) {
  m.validate();
  if (x.size() != m.generators) {
    throw DomainError("dimension_mismatch", "element length differs from generator count");
  }
  // Relation lattice L = rowspace(R) = rowspace(D V^-1). In coordinates
  // y = x V it is d_1 Z (+) ... (+) d_r Z (+) 0.
  auto snf = smith_normal_form(m.relation_matrix());
  const std::size_t g = m.generators;
  std::vector<Integer> y(g, 0);
  for (std::size_t c = 0; c < g; ++c)
    for (std::size_t k = 0; k < g; ++k) y[c] += x[k] * snf.v(k, c).get_num();
  auto factors = snf.invariant_factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    y[i] %= factors[i];
    if (y[i] < 0) y[i] += factors[i];
  }
  Matrix v_inv = unimodular_inverse(snf.v);
  GroupElement out(g, 0);
  for (std::size_t c = 0; c < g; ++c)
    for (std::size_t k = 0; k < g; ++k) out[c] += y[k] * v_inv(k, c).get_num();
  return out;
}

bool element_equal(const MonoidPresentation& m, const GroupElement& x, const GroupElement& y) {
  if (x.size() != m.generators || y.size() != m.generators) {
    throw DomainError("dimension_mismatch", "element length differs from generator count");
  }
  return canonical_form(m, x) == canonical_form(m, y);
}

}  // namespace kcalc
