#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcalc/toeplitz.hpp"

namespace kcalc {

// Transition function g_ab sampled at shared parameter values. The map key
// is the sample parameter; every matrix is rank x rank.
struct Transition {
  std::string a;
  std::string b;
  std::map<double, Eigen::MatrixXcd> samples;
};

// Gluing data for a vector bundle: charts plus sampled transition
// functions g_ab for ordered overlapping pairs.
struct CocycleData {
  std::vector<std::string> charts;
  std::size_t rank = 1;
  std::vector<Transition> transitions;

  // Samples a matrix symbol at the given circle angles (z = e^{i theta}).
  static Transition sample_symbol(std::string a, std::string b, const MatrixSymbol& g,
                                  const std::vector<double>& angles);
};

struct CocycleReport {
  bool passed = true;
  double worst_deviation = 0.0;
  // Offending relation: (c, b, a) for g_cb g_ba = g_ca, or the pair check.
  std::vector<std::string> worst_relation;
  std::optional<double> worst_parameter;
  std::size_t triples_checked = 0;
  std::size_t points_checked = 0;

  friend bool operator==(const CocycleReport&, const CocycleReport&) = default;
};

// Checks g_aa = 1, g_ab g_ba = 1 and g_cb g_ba = g_ca entrywise within tol
// at every shared sample. Throws DomainError("inconsistent_sampling") when
// a triple overlap has no common parameter.
CocycleReport validate_cocycle(const CocycleData& data, double tol);

// Bundle over S^2 up to isomorphism: rank and clutching degree.
struct ClutchingClass {
  std::size_t rank = 0;
  long degree = 0;

  friend bool operator==(const ClutchingClass&, const ClutchingClass&) = default;
};

// (n, wn(det f)); the winding comes from the dual-algorithm Toeplitz path.
ClutchingClass classify_over_s2(const MatrixSymbol& f);

}  // namespace kcalc
