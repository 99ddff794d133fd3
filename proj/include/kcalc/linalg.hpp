#pragma once

#include <vector>

#include "kcalc/exact.hpp"

namespace kcalc {

// Smith normal form witness: u * a * v == d with u, v unimodular and
// d diagonal, d_1 | d_2 | ... , d_i >= 0, zeros trailing.
struct SnfResult {
  Matrix u;
  Matrix d;
  Matrix v;

  // Nonzero diagonal entries of d, in order.
  std::vector<Integer> invariant_factors() const;
};

// Pivot rule: minimal |entry| of the active block, ties to the lowest
// (row, col); Euclidean row/column reduction; then a gcd pass to enforce
// divisibility. Fully deterministic in the input.
SnfResult smith_normal_form(const Matrix& a);

struct RankKernel {
  std::size_t rank = 0;
  std::vector<std::vector<Rational>> kernel_basis;
};

// Rank and a kernel basis over Q or F_p (one vector per free column of
// the reduced row echelon form).
RankKernel field_rank_kernel(const Matrix& a);

// Reduced row echelon form over a field; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& a);

Rational determinant(const Matrix& a);

// Exact inverse over a field; throws DomainError("singular_matrix").
Matrix inverse(const Matrix& a);

// Inverse of a unimodular integer matrix, returned over Z.
Matrix unimodular_inverse(const Matrix& a);

}  // namespace kcalc
