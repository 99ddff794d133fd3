#include <random>

#include "helpers.hpp"
#include "kcalc/toeplitz.hpp"

using namespace kcalc;

namespace {

using LS = LaurentSymbol;

LS z(int k = 1) { return LS::monomial(k); }
LS c(double v) { return LS::constant(v); }

}  // namespace

TEST_CASE("minimum modulus on the circle") {
  CHECK(min_modulus(c(1), 64) == doctest::Approx(1.0));
  CHECK(min_modulus(z(), 64) == doctest::Approx(1.0));
  CHECK(min_modulus(z() - c(1), 64) < 1e-12);
  CHECK(min_modulus(c(3) + z(), 64) == doctest::Approx(2.0));
}

TEST_CASE("symbol normalization") {
  const LS f = LS::from_terms({{-2, 1.0}, {3, 2.0}});
  CHECK(f.p() == 2);
  CHECK(f.q() == 3);
  CHECK(f.coefficient(3) == Complex(2.0));
  CHECK(f.coefficient(1) == Complex(0.0));
  CHECK(z(2).p() == 0);
  CHECK((z() * z(-1)) == c(1));
}

TEST_CASE("argument principle winding") {
  CHECK(winding_argument_principle(c(1)).winding == 0);
  CHECK(winding_argument_principle(z()).winding == 1);
  CHECK(winding_argument_principle(z(-3)).winding == -3);
  const LS f = (z() - c(2)) * (z() - c(0.5)) * z(-1);
  const auto r = winding_argument_principle(f);
  CHECK(r.winding == 0);
  CHECK(r.residual < 1e-6);
  CHECK(r.samples >= kMinQuadratureSamples);
}

TEST_CASE("root count winding") {
  CHECK(winding_root_count(z(3)) == 3);
  CHECK(winding_root_count(z(-1)) == -1);
  CHECK(winding_root_count(c(2) + z()) == 0);
  CHECK(winding_root_count(c(0.5) + z()) == 1);
  CHECK(winding_root_count((z() - c(2)) * (z() - c(0.5)) * z(-1)) == 0);
}

TEST_CASE("scalar Toeplitz index") {
  CHECK(toeplitz_index(z()).index == -1);
  CHECK(toeplitz_index(z()).winding == 1);
  CHECK(toeplitz_index(c(1)).index == 0);
  CHECK(toeplitz_index(z(-2)).index == 2);
}

TEST_CASE("matrix symbol index") {
  CHECK(matrix_symbol_index(MatrixSymbol::identity(3)).index == 0);
  CHECK(matrix_symbol_index(MatrixSymbol::diagonal({z(), z()})).index == -2);
  CHECK(matrix_symbol_index(MatrixSymbol::diagonal({z(), z(-1)})).index == 0);
  // [[z, 1], [0, z^2]] has det z^3
  const MatrixSymbol upper({{z(), c(1)}, {LS(), z(2)}});
  CHECK(matrix_symbol_index(upper).index == -3);
}

TEST_CASE("errors on the circle") {
  CHECK_DOMAIN_ERROR(winding_argument_principle(z() - c(1)), "not_invertible_on_circle");
  // exactly zero at a sample point: the modulus gate fires first
  CHECK_DOMAIN_ERROR(winding_root_count(z() - c(1)), "not_invertible_on_circle");
  // root between sample points passes the gate and is caught by the band
  const LS near = z() - LS::constant(std::polar(1.0, 1e-3));
  CHECK_DOMAIN_ERROR(winding_root_count(near), "root_on_circle");
  CHECK_DOMAIN_ERROR(toeplitz_index(z() - c(1)), "not_invertible_on_circle");
}

TEST_CASE("tolerance knobs are honoured") {
  WindingOptions strict;
  strict.residual_tolerance = -1.0;
  strict.max_samples = 1u << 10;
  CHECK_DOMAIN_ERROR(winding_argument_principle(z(), strict), "quadrature_not_converged");
  // a cap below the minimum still allows one pass
  WindingOptions capped;
  capped.max_samples = 1;
  CHECK(winding_argument_principle(z(), capped).samples == kMinQuadratureSamples);
  WindingOptions loose;
  loose.modulus_gate = 0.6;
  // |z - 0.5| dips to 0.5 on the circle
  CHECK_DOMAIN_ERROR(winding_argument_principle(z() - c(0.5), loose), "not_invertible_on_circle");
}

TEST_CASE("finite sections") {
  const auto one = truncate(c(1), 3);
  CHECK(one.matrix.isApprox(Eigen::MatrixXcd::Identity(3, 3)));
  const auto shift = truncate(z(), 3);
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
  expected(1, 0) = expected(2, 1) = 1.0;
  CHECK(shift.matrix.isApprox(expected));
  const auto mixed = truncate(z() + LS::monomial(-1, 2.0), 4);
  CHECK(mixed.constant_on_diagonals());
  CHECK(mixed.matrix(1, 0) == Complex(1.0));
  CHECK(mixed.matrix(0, 1) == Complex(2.0));
  CHECK(mixed.matrix(0, 0) == Complex(0.0));
}

TEST_CASE("structured index is minus the shift") {
  CHECK(structured_index({1, Matrix(0, 0)}).index == -1);
  CHECK(structured_index({0, Matrix(0, 0)}).index == 0);
  CHECK(structured_index({-2, Matrix(0, 0)}).index == 2);
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<long> entry(-5, 5);
  Matrix f(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t col = 0; col < 3; ++col) f.set(r, col, entry(gen));
  const auto r = structured_index({2, f});
  CHECK(r.index == -2);
  CHECK(static_cast<long>(r.kernel_dim) - static_cast<long>(r.cokernel_dim) == -2);
}

TEST_CASE("a perturbation can create kernel without moving the index") {
  // (A u)_0 = u_0 - u_0 = 0 for shift 0, F = -e_00: kernel and cokernel both 1.
  const auto r = structured_index({0, test::mat({{-1}}, Ring::rationals())});
  CHECK(r.index == 0);
  CHECK(r.kernel_dim == 1);
  CHECK(r.cokernel_dim == 1);
}
