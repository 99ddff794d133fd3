#include <algorithm>
#include <functional>
#include <random>

#include "helpers.hpp"
#include "kcalc/linalg.hpp"

using namespace kcalc;
using test::mat;

namespace {

// Cofactor determinant, fine for the tiny minors used here.
Integer cofactor_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      minor.emplace_back();
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) minor.back().push_back(m[r][k]);
    }
    Integer term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

void choose(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Invariant factors from determinantal divisors: D_k = gcd of k x k minors,
// d_k = D_k / D_{k-1}.
std::vector<Integer> invariant_factors_by_minors(const Matrix& a) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    choose(a.rows(), k, rs);
    choose(a.cols(), k, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]).get_num();
        Integer d = abs(cofactor_det(m));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

Integer det_z(const Matrix& a) {
  std::vector<std::vector<Integer>> m(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c).get_num();
  return cofactor_det(m);
}

}  // namespace

TEST_CASE("snf of the identity is the identity") {
  const auto s = smith_normal_form(Matrix::identity(3, Ring::integers()));
  CHECK(s.d.is_identity());
  CHECK(s.invariant_factors() == test::ints({1, 1, 1}));
}

TEST_CASE("snf of diag(2, 3) is diag(1, 6)") {
  const Matrix a = mat({{2, 0}, {0, 3}});
  const auto s = smith_normal_form(a);
  CHECK(s.d == mat({{1, 0}, {0, 6}}));
  CHECK(s.u * a * s.v == s.d);
}

TEST_CASE("snf of [[2,4],[6,8]] is diag(2, 4)") {
  const Matrix a = mat({{2, 4}, {6, 8}});
  const auto s = smith_normal_form(a);
  CHECK(s.d == mat({{2, 0}, {0, 4}}));
  CHECK(s.u * a * s.v == s.d);
}

TEST_CASE("snf of an empty matrix") {
  const auto s = smith_normal_form(Matrix(0, 3, Ring::integers()));
  CHECK(s.invariant_factors().empty());
  CHECK(s.d.rows() == 0);
  CHECK(s.d.cols() == 3);
}

TEST_CASE("snf of a zero matrix keeps zeros") {
  const auto s = smith_normal_form(Matrix(2, 3, Ring::integers()));
  CHECK(s.d.is_zero());
  CHECK(s.invariant_factors().empty());
}

TEST_CASE("snf is deterministic") {
  const Matrix a = mat({{4, -6, 10}, {2, 8, -4}, {6, 2, 6}});
  const auto s1 = smith_normal_form(a);
  const auto s2 = smith_normal_form(a);
  CHECK(s1.u == s2.u);
  CHECK(s1.d == s2.d);
  CHECK(s1.v == s2.v);
}

TEST_CASE("snf agrees with determinantal divisors on random matrices") {
  std::mt19937_64 gen(17);
  std::uniform_int_distribution<long> entry(-20, 20), dim(1, 4);
  for (int t = 0; t < 150; ++t) {
    const auto rows = static_cast<std::size_t>(dim(gen));
    const auto cols = static_cast<std::size_t>(dim(gen));
    Matrix a(rows, cols, Ring::integers());
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) a.set(r, c, entry(gen));
    if (t % 3 == 0 && rows > 1)  // force a dependent row
      for (std::size_t c = 0; c < cols; ++c) a.set(rows - 1, c, a(0, c) * 2);
    const auto s = smith_normal_form(a);
    CHECK(s.invariant_factors() == invariant_factors_by_minors(a));
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(det_z(s.u)) == 1);
    CHECK(abs(det_z(s.v)) == 1);
  }
}

TEST_CASE("rank and kernel over Q and F_2") {
  const auto z = field_rank_kernel(Matrix(2, 2, Ring::rationals()));
  CHECK(z.rank == 0);
  CHECK(z.kernel_basis.size() == 2);

  const auto q = field_rank_kernel(mat({{1, 1}, {1, 1}}, Ring::rationals()));
  CHECK(q.rank == 1);
  REQUIRE(q.kernel_basis.size() == 1);
  const auto& v = q.kernel_basis[0];
  CHECK(v[0] == -v[1]);
  CHECK(v[0] != 0);

  const auto f2 = field_rank_kernel(mat({{1, 1}, {1, 1}}, Ring::prime_field(2)));
  CHECK(f2.rank == 1);
  REQUIRE(f2.kernel_basis.size() == 1);
  CHECK(f2.kernel_basis[0] == std::vector<Rational>{1, 1});
}

TEST_CASE("rank depends on the characteristic") {
  const Matrix a = mat({{2, 0}, {0, 3}});
  CHECK(field_rank_kernel(a.with_ring(Ring::rationals())).rank == 2);
  CHECK(field_rank_kernel(a.with_ring(Ring::prime_field(2))).rank == 1);
  CHECK(field_rank_kernel(a.with_ring(Ring::prime_field(3))).rank == 1);
}

TEST_CASE("determinant examples") {
  CHECK(determinant(Matrix::identity(4)) == 1);
  CHECK(determinant(mat({{0, 1}, {-1, 0}})) == 1);
  CHECK(determinant(mat({{2, 4}, {6, 8}})) == -8);
  CHECK(determinant(mat({{2, 4}, {6, 8}}, Ring::prime_field(5))) == 2);
}

TEST_CASE("inverse and singular input") {
  const Matrix a = mat({{2, 1}, {1, 1}}, Ring::rationals());
  CHECK((a * inverse(a)).is_identity());
  CHECK_DOMAIN_ERROR(inverse(mat({{1, 2}, {2, 4}}, Ring::rationals())), "singular_matrix");
}

TEST_CASE("ring tags and reduction") {
  CHECK(Ring::parse("Fp:7") == Ring::prime_field(7));
  CHECK_DOMAIN_ERROR(Ring::parse("Fp:8"), "invalid_ring");
  CHECK_DOMAIN_ERROR(Ring::parse("R"), "invalid_ring");
  CHECK(Ring::prime_field(7).reduce(Rational(1, 2)) == 4);
  CHECK(Ring::rationals().reduce(Rational(-4, 4)) == -1);
  CHECK_DOMAIN_ERROR(Ring::integers().reduce(Rational(1, 2)), "invalid_entry");
}
