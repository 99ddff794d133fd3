#pragma once

#include <map>
#include <string>
#include <vector>

#include "kcalc/exact.hpp"

namespace kcalc {

// deg x_i = 1 (Total) or deg e_i = i, 1-based (Elementary).
enum class Grading { Total, Elementary };

// Sparse multivariate polynomial with exact rational coefficients.
// Exponent vectors carry no trailing zeros, so each monomial has exactly
// one key and zero coefficients are never stored.
class Poly {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, Rational>;

  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly variable(std::size_t index, const Rational& coeff = 1);
  static Poly monomial(Exponents exps, const Rational& coeff = 1);

  void add_term(Exponents exps, const Rational& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& exps) const;
  std::size_t variable_count() const;
  // Highest graded degree of any term; 0 for the zero polynomial.
  unsigned degree(Grading grading) const;
  Poly homogeneous_part(unsigned d, Grading grading) const;
  Poly truncated(unsigned bound, Grading grading) const;
  Poly swap_variables(std::size_t i, std::size_t j) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  // Product keeping only terms of graded degree <= bound.
  static Poly multiply(const Poly& a, const Poly& b, Grading grading, unsigned bound);
  static Poly power(const Poly& a, unsigned exponent, Grading grading, unsigned bound);

  // Human form, e.g. "x1^2 + 2*x1*x2 - 1/2*x3" with the given letter.
  std::string to_string(char letter) const;

 private:
  Terms terms_;
};

unsigned graded_degree(const Poly::Exponents& exps, Grading grading);

}  // namespace kcalc
