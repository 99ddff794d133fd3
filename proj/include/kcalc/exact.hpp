#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kcalc {

using Integer = mpz_class;
using Rational = mpq_class;

// Coefficient ring of an exact matrix: the integers, the rationals or a
// prime field F_p. Field arithmetic on residues goes through the ring so
// F_p values always stay reduced into [0, p).
class Ring {
 public:
  enum class Kind { Z, Q, Fp };

  static Ring integers() { return Ring(Kind::Z, 0); }
  static Ring rationals() { return Ring(Kind::Q, 0); }
  // Throws DomainError("invalid_ring") unless p is prime.
  static Ring prime_field(unsigned long p);
  // Accepts "Z", "Q" or "Fp:<p>".
  static Ring parse(std::string_view tag);

  Kind kind() const { return kind_; }
  unsigned long characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::Z; }
  std::string to_string() const;

  // Brings an arbitrary rational into canonical form for this ring.
  // Z rejects non-integers; F_p rejects denominators divisible by p.
  Rational reduce(const Rational& x) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  // Field inverse; throws on zero or when the ring is Z.
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind kind, unsigned long p) : kind_(kind), p_(p) {}

  Kind kind_;
  unsigned long p_;
};

// Dense exact matrix over Z, Q or F_p. Entries are kept canonical for the
// ring at all times, so equality is plain entrywise comparison.
class Matrix {
 public:
  Matrix() : ring_(Ring::rationals()) {}
  Matrix(std::size_t rows, std::size_t cols, Ring ring = Ring::rationals());

  static Matrix identity(std::size_t n, Ring ring = Ring::rationals());
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows,
                          Ring ring = Ring::rationals());

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Ring& ring() const { return ring_; }

  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, const Rational& value);

  std::vector<Rational> row(std::size_t r) const;
  Matrix transpose() const;
  // Reinterprets entries in another ring (e.g. Z -> Q, Z -> F_p).
  Matrix with_ring(Ring ring) const;
  // Copy of the rectangular block starting at (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Ring ring_;
  std::vector<Rational> data_;
};

// Block-diagonal assembly; all blocks must share a ring.
Matrix block_diagonal(const std::vector<Matrix>& blocks);

}  // namespace kcalc
