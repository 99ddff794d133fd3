#pragma once

#include <map>
#include <string>
#include <vector>

#include "kcalc/exact.hpp"
#include "kcalc/poly.hpp"
#include "kcalc/symfun.hpp"

namespace kcalc {

// Tensor product of powers of the base lines L_1..L_k; entry j is the
// power of L_j (negative for duals). Its Chern root is exps . (x_1..x_k).
using LineMonomial = std::vector<long>;

// Formal Z-combination of line monomials: a sum of line bundles under the
// splitting principle, or a formal difference of such sums.
class VirtualSplitBundle {
 public:
  explicit VirtualSplitBundle(std::size_t base_lines = 0) : base_lines_(base_lines) {}

  static VirtualSplitBundle trivial(std::size_t base_lines, const Integer& rank);
  static VirtualSplitBundle line(LineMonomial exps, const Integer& mult = 1);

  void add(LineMonomial exps, const Integer& mult);

  std::size_t base_lines() const { return base_lines_; }
  const std::map<LineMonomial, Integer>& terms() const { return terms_; }
  Integer dimension() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_effective() const;
  VirtualSplitBundle padded(std::size_t base_lines) const;

  // Positive part minus negated negative part: *this = plus - minus.
  VirtualSplitBundle positive_part() const;
  VirtualSplitBundle negative_part() const;

  VirtualSplitBundle operator-() const;
  friend bool operator==(const VirtualSplitBundle& a, const VirtualSplitBundle& b);

  std::string to_string() const;

 private:
  std::size_t base_lines_;
  std::map<LineMonomial, Integer> terms_;
};

VirtualSplitBundle bundle_sum(const VirtualSplitBundle& v, const VirtualSplitBundle& w);
VirtualSplitBundle bundle_tensor(const VirtualSplitBundle& v, const VirtualSplitBundle& w);

// Rational even-cohomology class in the root variables x_1..x_k,
// truncated at degree N. Component d is the degree-d homogeneous part.
struct GradedClass {
  std::size_t variables = 0;
  unsigned truncation = kDefaultTruncation;
  Poly poly;

  Poly component(unsigned d) const { return poly.homogeneous_part(d, Grading::Total); }
  std::vector<Poly> components() const;

  friend bool operator==(const GradedClass&, const GradedClass&) = default;
};

GradedClass graded_sum(const GradedClass& a, const GradedClass& b);
GradedClass graded_product(const GradedClass& a, const GradedClass& b);

GradedClass total_chern(const VirtualSplitBundle& v, unsigned bound = kDefaultTruncation);
GradedClass chern_character(const VirtualSplitBundle& v, unsigned bound = kDefaultTruncation);

// Coefficients of t^0..t^terms-1 of a power series with K-theory coefficients.
using BundleSeries = std::vector<VirtualSplitBundle>;

BundleSeries lambda_series(const VirtualSplitBundle& v, unsigned max_power);
BundleSeries sym_series(const VirtualSplitBundle& v, unsigned max_power);
BundleSeries series_product(const BundleSeries& a, const BundleSeries& b);
// f(t) -> f(-t)
BundleSeries series_negate_t(const BundleSeries& a);

VirtualSplitBundle lambda_op(const VirtualSplitBundle& v, unsigned k);
VirtualSplitBundle sym_op(const VirtualSplitBundle& v, unsigned k);
VirtualSplitBundle adams_op(const VirtualSplitBundle& v, unsigned k);

// What the Chern-class side knows about a bundle: its virtual rank and
// its total Chern class.
struct ChernData {
  Integer rank;
  GradedClass total;
};

ChernData chern_data(const VirtualSplitBundle& v, unsigned bound = kDefaultTruncation);

// ch(psi^k V) from Chern classes only: the degree-d part is
// k^d / d! * p_d(c_1, ..., c_d) with p_d the Newton polynomial.
GradedClass adams_via_newton(const ChernData& data, unsigned k, unsigned bound = kDefaultTruncation);

// Degree-d component multiplied by d!; integral whenever the roots have
// integer coordinates.
Poly clear_factorials(const GradedClass& c);

// a + b*u in K(S^{2n}) with u^2 = 0.
struct SphereKElement {
  unsigned n = 1;
  Integer a;
  Integer b;

  friend bool operator==(const SphereKElement&, const SphereKElement&) = default;
};

SphereKElement sphere_sum(const SphereKElement& x, const SphereKElement& y);
SphereKElement sphere_product(const SphereKElement& x, const SphereKElement& y);
// psi^k(a + b u) = a + k^n b u.
SphereKElement sphere_adams(const SphereKElement& e, unsigned k);

}  // namespace kcalc
