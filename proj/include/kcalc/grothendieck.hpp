#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kcalc/exact.hpp"

namespace kcalc {

// Finitely generated abelian group Z^free_rank (+) Z/d_1 (+) ... in
// invariant-factor form: d_i >= 2 and d_1 | d_2 | ...
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  static AbelianGroup trivial() { return {}; }
  static AbelianGroup free(std::size_t rank) { return {rank, {}}; }
  // Cyclic group of the given order; order 0 means Z, order 1 the trivial group.
  static AbelianGroup cyclic(const Integer& order);
  // Drops unit factors and checks the divisibility chain.
  static AbelianGroup from_invariant_factors(std::size_t free_rank,
                                             const std::vector<Integer>& factors);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  // "0", "Z", "Z^3", "Z/15", "Z (+) Z/2", ...
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

struct MonoidRelation {
  std::vector<Integer> lhs;
  std::vector<Integer> rhs;

  friend bool operator==(const MonoidRelation&, const MonoidRelation&) = default;
};

// Commutative monoid on `generators` generators subject to lhs = rhs.
struct MonoidPresentation {
  std::size_t generators = 0;
  std::vector<MonoidRelation> relations;

  // Throws DomainError("invalid_presentation") on wrong lengths or
  // negative entries.
  void validate() const;
  // One row u - v per relation.
  Matrix relation_matrix() const;

  friend bool operator==(const MonoidPresentation&, const MonoidPresentation&) = default;
};

// Formal difference [u] - [v] in the completed group, stored as u - v.
using GroupElement = std::vector<Integer>;

AbelianGroup group_completion(const MonoidPresentation& m);

// Unique representative of x modulo the relation lattice. Coordinates are
// changed by the SNF column witness, reduced mod each invariant factor,
// and mapped back.
GroupElement canonical_form(const MonoidPresentation& m, const GroupElement& x);

bool element_equal(const MonoidPresentation& m, const GroupElement& x, const GroupElement& y);

}  // namespace kcalc
