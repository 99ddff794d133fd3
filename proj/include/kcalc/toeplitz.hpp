#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "kcalc/exact.hpp"

namespace kcalc {

using Complex = std::complex<double>;

// Laurent polynomial sum_{k=-p}^{q} a_k z^k on the unit circle.
// Exact-zero coefficients at either end are dropped, but the stored range
// always contains k = 0, so p = -lowest and q = highest index.
class LaurentSymbol {
 public:
  LaurentSymbol() = default;
  static LaurentSymbol constant(Complex c);
  static LaurentSymbol monomial(int k, Complex c = 1.0);
  static LaurentSymbol from_terms(const std::vector<std::pair<int, Complex>>& terms);

  int p() const { return -low_; }
  int q() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Complex coefficient(int k) const;
  // Nonzero coefficients as (k, a_k), ascending in k.
  std::vector<std::pair<int, Complex>> terms() const;
  bool is_zero() const;

  Complex operator()(Complex z) const;
  // Coefficients of z^p f(z), constant term first.
  std::vector<Complex> polynomial_coefficients() const;

  LaurentSymbol operator+(const LaurentSymbol& other) const;
  LaurentSymbol operator-(const LaurentSymbol& other) const;
  LaurentSymbol operator*(const LaurentSymbol& other) const;
  // Drops coefficients with |a_k| <= rel * max |a_j|.
  LaurentSymbol pruned(double rel) const;

  friend bool operator==(const LaurentSymbol&, const LaurentSymbol&) = default;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Complex> coeffs_{Complex(0.0)};
};

// n x n grid of Laurent symbols: a loop S^1 -> M_n(C).
class MatrixSymbol {
 public:
  MatrixSymbol() = default;
  explicit MatrixSymbol(std::vector<std::vector<LaurentSymbol>> entries);
  static MatrixSymbol identity(std::size_t n);
  static MatrixSymbol diagonal(const std::vector<LaurentSymbol>& entries);

  std::size_t size() const { return entries_.size(); }
  const LaurentSymbol& operator()(std::size_t r, std::size_t c) const { return entries_[r][c]; }

  // Cofactor expansion over Laurent polynomials.
  LaurentSymbol determinant() const;
  MatrixSymbol operator*(const MatrixSymbol& other) const;
  // diag(f, 1): the stabilization GL_n -> GL_{n+1}.
  MatrixSymbol stabilized() const;
  Eigen::MatrixXcd evaluate(Complex z) const;

  friend bool operator==(const MatrixSymbol&, const MatrixSymbol&) = default;

 private:
  std::vector<std::vector<LaurentSymbol>> entries_;
};

inline constexpr double kModulusGate = 1e-8;
inline constexpr double kResidualTolerance = 1e-6;
inline constexpr double kCircleBand = 1e-6;
inline constexpr std::size_t kMinQuadratureSamples = 1u << 8;
inline constexpr std::size_t kMaxQuadratureSamples = 1u << 14;

// Numeric knobs of the winding algorithms; defaults are the constants above.
struct WindingOptions {
  double modulus_gate = kModulusGate;
  double residual_tolerance = kResidualTolerance;
  double circle_band = kCircleBand;
  std::size_t max_samples = kMaxQuadratureSamples;
};

// min |f(z)| over `samples` equally spaced points of the unit circle.
// Requires samples >= 4(p + q + 1).
double min_modulus(const LaurentSymbol& f, std::size_t samples);

struct ArgumentPrincipleResult {
  long winding = 0;
  double residual = 0.0;
  std::size_t samples = 0;

  friend bool operator==(const ArgumentPrincipleResult&, const ArgumentPrincipleResult&) = default;
};

// Trapezoidal (1/2 pi i) \oint f'/f dz with sample doubling. Errors:
// "not_invertible_on_circle", "quadrature_not_converged".
ArgumentPrincipleResult winding_argument_principle(const LaurentSymbol& f, const WindingOptions& opts = {});

// (#roots of z^p f in the open unit disk) - p via balanced companion
// eigenvalues. Errors: "root_on_circle", "degenerate_polynomial".
long winding_root_count(const LaurentSymbol& f, const WindingOptions& opts = {});

struct IndexResult {
  long index = 0;
  long winding = 0;
  long root_count_winding = 0;
  double residual = 0.0;
  std::size_t samples = 0;

  friend bool operator==(const IndexResult&, const IndexResult&) = default;
};

// Ind T_f = -wn(f); both winding algorithms must agree.
IndexResult toeplitz_index(const LaurentSymbol& f, const WindingOptions& opts = {});
IndexResult matrix_symbol_index(const MatrixSymbol& f, const WindingOptions& opts = {});

// Finite section of T_f: entry (i, j) = a_{i-j}.
struct ToeplitzTruncation {
  Eigen::MatrixXcd matrix;

  bool constant_on_diagonals() const;
};

ToeplitzTruncation truncate(const LaurentSymbol& f, std::size_t n);

// (A u)_i = u_{i - shift} + (F u)_i on one-sided sequences, F square over Q
// acting on the leading coordinates.
struct StructuredOperator {
  long shift = 0;
  Matrix perturbation{0, 0, Ring::rationals()};
};

struct StructuredIndexResult {
  long index = 0;
  std::size_t kernel_dim = 0;
  std::size_t cokernel_dim = 0;
  std::size_t window = 0;

  friend bool operator==(const StructuredIndexResult&, const StructuredIndexResult&) = default;
};

// Dimension of ker A, computed exactly on a finite support window and
// checked for stabilization at window + 1.
std::size_t structured_kernel_dim(const StructuredOperator& a);

StructuredIndexResult structured_index(const StructuredOperator& a);

}  // namespace kcalc
