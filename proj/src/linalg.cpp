#include "kcalc/linalg.hpp"

#include <utility>

#include "kcalc/error.hpp"

namespace kcalc {

namespace {

using IntGrid = std::vector<std::vector<Integer>>;

IntGrid to_grid(const Matrix& a) {
  IntGrid g(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) g[r][c] = a(r, c).get_num();
  return g;
}

IntGrid identity_grid(std::size_t n) {
  IntGrid g(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
  return g;
}

Matrix from_grid(const IntGrid& g, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols, Ring::integers());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Rational(g[r][c]));
  return m;
}

// Working state of the Smith reduction. Row operations act on a and u,
// column operations on a and v.
struct SnfState {
  IntGrid a, u, v;
  std::size_t m, n;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  // row_i -= q * row_j
  void row_axpy(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < n; ++c) a[i][c] -= q * a[j][c];
    for (std::size_t c = 0; c < m; ++c) u[i][c] -= q * u[j][c];
  }
  // col_i -= q * col_j
  void col_axpy(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t r = 0; r < m; ++r) a[r][i] -= q * a[r][j];
    for (std::size_t r = 0; r < n; ++r) v[r][i] -= q * v[r][j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }

  bool min_entry(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < m; ++r) {
      for (std::size_t c = t; c < n; ++c) {
        if (a[r][c] == 0) continue;
        Integer mag = abs(a[r][c]);
        if (!found || mag < best) {
          found = true;
          best = mag;
          pr = r;
          pc = c;
        }
      }
    }
    return found;
  }

  // diag(x, y) at positions i < j becomes diag(gcd, lcm) by a unimodular
  // 2x2 row operation and a unimodular 2x2 column operation.
  void gcd_fix(std::size_t i, std::size_t j) {
    Integer x = a[i][i], y = a[j][j], g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    Integer xg = x / g, yg = y / g;
    for (std::size_t c = 0; c < m; ++c) {
      Integer ui = u[i][c], uj = u[j][c];
      u[i][c] = s * ui + t * uj;
      u[j][c] = -yg * ui + xg * uj;
    }
    for (std::size_t r = 0; r < n; ++r) {
      Integer vi = v[r][i], vj = v[r][j];
      v[r][i] = vi + vj;
      v[r][j] = -t * yg * vi + s * xg * vj;
    }
    a[i][i] = g;
    a[j][j] = x * yg;
  }
};

}  // namespace

std::vector<Integer> SnfResult::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i) {
    if (d(i, i) != 0) out.push_back(d(i, i).get_num());
  }
  return out;
}

SnfResult smith_normal_form(const Matrix& input) {
  Matrix a = input.ring().kind() == Ring::Kind::Z ? input : input.with_ring(Ring::integers());
  SnfState s{to_grid(a), identity_grid(a.rows()), identity_grid(a.cols()), a.rows(), a.cols()};

  std::size_t rank = 0;
  for (std::size_t t = 0; t < s.m && t < s.n; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!s.min_entry(t, pr, pc)) break;
    for (;;) {
      s.swap_rows(t, pr);
      s.swap_cols(t, pc);
      bool clean = true;
      for (std::size_t r = t + 1; r < s.m; ++r) {
        if (s.a[r][t] == 0) continue;
        s.row_axpy(r, t, Integer(s.a[r][t] / s.a[t][t]));
        clean = clean && s.a[r][t] == 0;
      }
      for (std::size_t c = t + 1; c < s.n; ++c) {
        if (s.a[t][c] == 0) continue;
        s.col_axpy(c, t, Integer(s.a[t][c] / s.a[t][t]));
        clean = clean && s.a[t][c] == 0;
      }
      if (clean) break;
      s.min_entry(t, pr, pc);
    }
    ++rank;
  }

  for (std::size_t i = 0; i < rank; ++i)
    if (s.a[i][i] < 0) s.negate_row(i);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j)
      if (s.a[j][j] % s.a[i][i] != 0) s.gcd_fix(i, j);

  return SnfResult{from_grid(s.u, s.m, s.m), from_grid(s.a, s.m, s.n), from_grid(s.v, s.n, s.n)};
}

std::vector<std::size_t> row_reduce(Matrix& a) {
  const Ring& ring = a.ring();
  if (!ring.is_field()) throw DomainError("invalid_ring", "row reduction needs a field");
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        Rational tmp = a(row, c);
        a.set(row, c, a(p, c));
        a.set(p, c, tmp);
      }
    }
    Rational inv = ring.inv(a(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a.set(row, c, ring.mul(a(row, c), inv));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        a.set(r, c, ring.sub(a(r, c), ring.mul(f, a(row, c))));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RankKernel field_rank_kernel(const Matrix& input) {
  Matrix a = input;
  auto pivots = row_reduce(a);
  const Ring& ring = a.ring();
  RankKernel out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(a.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = ring.neg(a(r, f));
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

Rational determinant(const Matrix& input) {
  if (!input.is_square()) throw DomainError("dimension_mismatch", "determinant of non-square matrix");
  const bool integral = input.ring().kind() == Ring::Kind::Z;
  Matrix a = integral ? input.with_ring(Ring::rationals()) : input;
  const Ring& ring = a.ring();
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) {
        Rational tmp = a(col, c);
        a.set(col, c, a(p, c));
        a.set(p, c, tmp);
      }
      det = ring.neg(det);
    }
    det = ring.mul(det, a(col, col));
    Rational inv = ring.inv(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rational f = ring.mul(a(r, col), inv);
      for (std::size_t c = col; c < n; ++c) a.set(r, c, ring.sub(a(r, c), ring.mul(f, a(col, c))));
    }
  }
  return det;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw DomainError("dimension_mismatch", "inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n, a.ring());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, a(r, c));
    aug.set(r, n + r, 1);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw DomainError("singular_matrix", "matrix is singular");
  }
  return aug.block(0, n, n, n);
}

Matrix unimodular_inverse(const Matrix& a) {
  Matrix inv = inverse(a.with_ring(Ring::rationals()));
  return inv.with_ring(Ring::integers());
}

}  // namespace kcalc
