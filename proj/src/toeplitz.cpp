#include "kcalc/toeplitz.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "kcalc/error.hpp"
#include "kcalc/linalg.hpp"

namespace kcalc {

namespace {

Complex unit_root(std::size_t j, std::size_t n) {
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
  return {std::cos(theta), std::sin(theta)};
}

// Parlett-Reinsch balancing (radix 2), no permutations.
void balance(Eigen::MatrixXcd& a) {
  const double radix = 2.0;
  const double sqrdx = radix * radix;
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i).real()) + std::abs(a(j, i).imag());
        r += std::abs(a(i, j).real()) + std::abs(a(i, j).imag());
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix, f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) *= 1.0 / f;
        a.col(i) *= f;
      }
    }
  }
}

void require_invertible(const LaurentSymbol& f, const WindingOptions& opts) {
  const std::size_t gate_samples =
      std::max<std::size_t>(4 * static_cast<std::size_t>(f.p() + f.q() + 1), opts.max_samples);
  if (min_modulus(f, gate_samples) <= opts.modulus_gate) {
    throw DomainError("not_invertible_on_circle", "symbol is not invertible on the circle");
  }
}

}  // namespace

LaurentSymbol LaurentSymbol::constant(Complex c) { return monomial(0, c); }

LaurentSymbol LaurentSymbol::monomial(int k, Complex c) { return from_terms({{k, c}}); }

LaurentSymbol LaurentSymbol::from_terms(const std::vector<std::pair<int, Complex>>& terms) {
  int lo = 0, hi = 0;
  for (const auto& [k, c] : terms) {
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  LaurentSymbol f;
  f.low_ = lo;
  f.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Complex(0.0));
  for (const auto& [k, c] : terms) f.coeffs_[static_cast<std::size_t>(k - lo)] += c;
  f.normalize();
  return f;
}

void LaurentSymbol::normalize() {
  // Keep index 0 inside the stored range.
  while (low_ < 0 && coeffs_.front() == Complex(0.0)) {
    coeffs_.erase(coeffs_.begin());
    ++low_;
  }
  while (coeffs_.size() > 1 && low_ + static_cast<int>(coeffs_.size()) - 1 > 0 &&
         coeffs_.back() == Complex(0.0)) {
    coeffs_.pop_back();
  }
}

Complex LaurentSymbol::coefficient(int k) const {
  if (k < low_ || k > q()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k - low_)];
}

std::vector<std::pair<int, Complex>> LaurentSymbol::terms() const {
  std::vector<std::pair<int, Complex>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != Complex(0.0)) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

bool LaurentSymbol::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex(0.0); });
}

Complex LaurentSymbol::operator()(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc * std::pow(z, low_);
}

std::vector<Complex> LaurentSymbol::polynomial_coefficients() const { return coeffs_; }

LaurentSymbol LaurentSymbol::operator+(const LaurentSymbol& other) const {
  auto t = terms();
  auto u = other.terms();
  t.insert(t.end(), u.begin(), u.end());
  return from_terms(t);
}

LaurentSymbol LaurentSymbol::operator-(const LaurentSymbol& other) const {
  auto t = terms();
  for (const auto& [k, c] : other.terms()) t.emplace_back(k, -c);
  return from_terms(t);
}

LaurentSymbol LaurentSymbol::operator*(const LaurentSymbol& other) const {
  LaurentSymbol f;
  f.low_ = low_ + other.low_;
  f.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) f.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  f.normalize();
  return f;
}

LaurentSymbol LaurentSymbol::pruned(double rel) const {
  double scale = 0.0;
  for (auto c : coeffs_) scale = std::max(scale, std::abs(c));
  std::vector<std::pair<int, Complex>> kept;
  for (const auto& [k, c] : terms())
    if (std::abs(c) > rel * scale) kept.emplace_back(k, c);
  return from_terms(kept);
}

MatrixSymbol::MatrixSymbol(std::vector<std::vector<LaurentSymbol>> entries) : entries_(std::move(entries)) {
  for (const auto& row : entries_) {
    if (row.size() != entries_.size()) throw DomainError("dimension_mismatch", "matrix symbol must be square");
  }
}

MatrixSymbol MatrixSymbol::identity(std::size_t n) {
  std::vector<LaurentSymbol> diag(n, LaurentSymbol::constant(1.0));
  return diagonal(diag);
}

MatrixSymbol MatrixSymbol::diagonal(const std::vector<LaurentSymbol>& entries) {
  const std::size_t n = entries.size();
  std::vector<std::vector<LaurentSymbol>> grid(n, std::vector<LaurentSymbol>(n));
  for (std::size_t i = 0; i < n; ++i) grid[i][i] = entries[i];
  return MatrixSymbol(std::move(grid));
}

LaurentSymbol MatrixSymbol::determinant() const {
  const std::size_t n = size();
  if (n == 0) return LaurentSymbol::constant(1.0);
  if (n == 1) return entries_[0][0];
  LaurentSymbol det;
  for (std::size_t c = 0; c < n; ++c) {
    if (entries_[0][c].is_zero()) continue;
    std::vector<std::vector<LaurentSymbol>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentSymbol> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(entries_[r][k]);
      minor.push_back(std::move(row));
    }
    LaurentSymbol term = entries_[0][c] * MatrixSymbol(std::move(minor)).determinant();
    det = c % 2 == 0 ? det + term : det - term;
  }
  return det;
}

MatrixSymbol MatrixSymbol::operator*(const MatrixSymbol& other) const {
  const std::size_t n = size();
  if (other.size() != n) throw DomainError("dimension_mismatch", "matrix symbol sizes differ");
  std::vector<std::vector<LaurentSymbol>> grid(n, std::vector<LaurentSymbol>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) grid[i][j] = grid[i][j] + entries_[i][k] * other.entries_[k][j];
  return MatrixSymbol(std::move(grid));
}

MatrixSymbol MatrixSymbol::stabilized() const {
  const std::size_t n = size();
  std::vector<std::vector<LaurentSymbol>> grid(n + 1, std::vector<LaurentSymbol>(n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) grid[i][j] = entries_[i][j];
  grid[n][n] = LaurentSymbol::constant(1.0);
  return MatrixSymbol(std::move(grid));
}

Eigen::MatrixXcd MatrixSymbol::evaluate(Complex z) const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)](z);
  return m;
}

double min_modulus(const LaurentSymbol& f, std::size_t samples) {
  const std::size_t needed = 4 * static_cast<std::size_t>(f.p() + f.q() + 1);
  if (samples < needed) {
    throw DomainError("invalid_argument",
                      "min_modulus needs at least " + std::to_string(needed) + " samples");
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < samples; ++j) best = std::min(best, std::abs(f(unit_root(j, samples))));
  return best;
}

ArgumentPrincipleResult winding_argument_principle(const LaurentSymbol& f, const WindingOptions& opts) {
  require_invertible(f, opts);
  // z f'/f = -p + z P'/P with P(z) = z^p f(z).
  const auto coeffs = f.polynomial_coefficients();
  const double p = f.p();
  const std::size_t start =
      std::max<std::size_t>(kMinQuadratureSamples, 4 * static_cast<std::size_t>(f.p() + f.q() + 1));
  ArgumentPrincipleResult last;
  for (std::size_t n = start; n <= std::max(start, opts.max_samples); n *= 2) {
    Complex sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const Complex z = unit_root(j, n);
      Complex value = 0.0, slope = 0.0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        slope = slope * z + value;
        value = value * z + *it;
      }
      sum += z * slope / value;
    }
    const Complex mean = sum / static_cast<double>(n) - p;
    const double rounded = std::round(mean.real());
    last = {static_cast<long>(rounded), std::abs(mean - Complex(rounded, 0.0)), n};
    if (last.residual < opts.residual_tolerance) return last;
  }
  throw DomainError("quadrature_not_converged",
                    "argument-principle residual " + std::to_string(last.residual) + " at " +
                        std::to_string(last.samples) + " samples");
}

long winding_root_count(const LaurentSymbol& f, const WindingOptions& opts) {
  require_invertible(f, opts);
  auto coeffs = f.polynomial_coefficients();
  std::size_t zeros_at_origin = 0;
  while (zeros_at_origin < coeffs.size() && coeffs[zeros_at_origin] == Complex(0.0)) ++zeros_at_origin;
  if (zeros_at_origin == coeffs.size()) {
    throw DomainError("degenerate_polynomial", "symbol is identically zero");
  }
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(zeros_at_origin));
  while (coeffs.size() > 1 && coeffs.back() == Complex(0.0)) coeffs.pop_back();
  const auto degree = static_cast<Eigen::Index>(coeffs.size()) - 1;
  long inside = static_cast<long>(zeros_at_origin);
  if (degree > 0) {
    const Complex lead = coeffs.back();
    if (!std::isfinite(std::abs(lead)) || lead == Complex(0.0)) {
      throw DomainError("degenerate_polynomial", "leading coefficient vanishes");
    }
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (Eigen::Index i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < degree; ++i) companion(i, degree - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;
    balance(companion);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
      throw DomainError("degenerate_polynomial", "companion eigenvalue iteration failed");
    }
    for (Eigen::Index i = 0; i < degree; ++i) {
      const double r = std::abs(solver.eigenvalues()(i));
      if (std::abs(r - 1.0) < opts.circle_band) {
        throw DomainError("root_on_circle", "root within " + std::to_string(opts.circle_band) + " of the unit circle");
      }
      if (r < 1.0) ++inside;
    }
  }
  return inside - f.p();
}

IndexResult toeplitz_index(const LaurentSymbol& f, const WindingOptions& opts) {
  auto quad = winding_argument_principle(f, opts);
  long roots = winding_root_count(f, opts);
  if (quad.winding != roots) {
    throw DomainError("winding_disagreement", "argument principle gives " + std::to_string(quad.winding) +
                                                  ", root count gives " + std::to_string(roots));
  }
  return {-quad.winding, quad.winding, roots, quad.residual, quad.samples};
}

IndexResult matrix_symbol_index(const MatrixSymbol& f, const WindingOptions& opts) {
  return toeplitz_index(f.determinant().pruned(1e-13), opts);
}

bool ToeplitzTruncation::constant_on_diagonals() const {
  for (Eigen::Index i = 1; i < matrix.rows(); ++i)
    for (Eigen::Index j = 1; j < matrix.cols(); ++j)
      if (matrix(i, j) != matrix(i - 1, j - 1)) return false;
  return true;
}

ToeplitzTruncation truncate(const LaurentSymbol& f, std::size_t n) {
  if (n == 0) throw DomainError("invalid_argument", "truncation size must be positive");
  const auto size = static_cast<Eigen::Index>(n);
  ToeplitzTruncation t{Eigen::MatrixXcd::Zero(size, size)};
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) t.matrix(i, j) = f.coefficient(static_cast<int>(i - j));
  return t;
}

namespace {

std::size_t kernel_dim_at(const StructuredOperator& a, std::size_t window) {
  const std::size_t k = a.perturbation.rows();
  const std::size_t rows = window + static_cast<std::size_t>(std::max(a.shift, 0L));
  Matrix m(rows, window, Ring::rationals());
  for (std::size_t i = 0; i < rows; ++i) {
    const long j = static_cast<long>(i) - a.shift;
    if (j >= 0 && j < static_cast<long>(window)) m.set(i, static_cast<std::size_t>(j), 1);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (a.perturbation(i, j) != 0) m.set(i, j, m(i, j) + a.perturbation(i, j));
  return field_rank_kernel(m).kernel_basis.size();
}

}  // namespace

std::size_t structured_kernel_dim(const StructuredOperator& a) {
  if (!a.perturbation.is_square()) {
    throw DomainError("dimension_mismatch", "perturbation block must be square");
  }
  const std::size_t window =
      a.perturbation.rows() + static_cast<std::size_t>(std::labs(a.shift)) + 4;
  const std::size_t dim = kernel_dim_at(a, window);
  if (kernel_dim_at(a, window + 1) != dim) {
    throw DomainError("window_not_stabilized", "kernel dimension changed when the window grew");
  }
  return dim;
}

StructuredIndexResult structured_index(const StructuredOperator& a) {
  Matrix f = a.perturbation.ring().kind() == Ring::Kind::Q ? a.perturbation
                                                           : a.perturbation.with_ring(Ring::rationals());
  StructuredOperator op{a.shift, f};
  StructuredOperator adjoint{-a.shift, f.transpose()};
  StructuredIndexResult r;
  r.kernel_dim = structured_kernel_dim(op);
  r.cokernel_dim = structured_kernel_dim(adjoint);
  r.index = static_cast<long>(r.kernel_dim) - static_cast<long>(r.cokernel_dim);
  r.window = f.rows() + static_cast<std::size_t>(std::labs(a.shift)) + 4;
  return r;
}

}  // namespace kcalc
