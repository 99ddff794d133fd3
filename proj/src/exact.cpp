#include "kcalc/exact.hpp"

#include <sstream>

#include "kcalc/error.hpp"

namespace kcalc {

namespace {

Integer mod_nonneg(const Integer& x, unsigned long p) {
  Integer r = x % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

Ring Ring::prime_field(unsigned long p) {
  Integer pp = p;
  if (p < 2 || mpz_probab_prime_p(pp.get_mpz_t(), 40) == 0) {
    throw DomainError("invalid_ring", "F_p requires a prime p, got " + std::to_string(p));
  }
  return Ring(Kind::Fp, p);
}

Ring Ring::parse(std::string_view tag) {
  if (tag == "Z") return integers();
  if (tag == "Q") return rationals();
  if (tag.substr(0, 3) == "Fp:") {
    std::string digits(tag.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError("invalid_ring", "malformed ring tag: " + std::string(tag));
    }
    return prime_field(std::stoul(digits));
  }
  throw DomainError("invalid_ring", "unknown ring tag: " + std::string(tag));
}

std::string Ring::to_string() const {
  switch (kind_) {
    case Kind::Z:
      return "Z";
    case Kind::Q:
      return "Q";
    case Kind::Fp:
      return "Fp:" + std::to_string(p_);
  }
  return "?";
}

Rational Ring::reduce(const Rational& raw) const {
  // Callers may hand in an unnormalized quotient such as 4/4.
  Rational x = raw;
  x.canonicalize();
  switch (kind_) {
    case Kind::Q:
      return x;
    case Kind::Z:
      if (x.get_den() != 1) {
        throw DomainError("invalid_entry", "non-integer entry " + x.get_str() + " in a Z matrix");
      }
      return x;
    case Kind::Fp: {
      Integer num = mod_nonneg(x.get_num(), p_);
      Integer den = mod_nonneg(x.get_den(), p_);
      if (den == 0) {
        throw DomainError("invalid_entry", "denominator of " + x.get_str() + " vanishes mod p");
      }
      if (den != 1) {
        Integer pp = p_;
        mpz_invert(den.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
        num = mod_nonneg(num * den, p_);
      }
      return Rational(num);
    }
  }
  return x;
}

Rational Ring::add(const Rational& a, const Rational& b) const {
  if (kind_ != Kind::Fp) return a + b;
  return Rational(mod_nonneg(a.get_num() + b.get_num(), p_));
}

Rational Ring::sub(const Rational& a, const Rational& b) const {
  if (kind_ != Kind::Fp) return a - b;
  return Rational(mod_nonneg(a.get_num() - b.get_num(), p_));
}

Rational Ring::mul(const Rational& a, const Rational& b) const {
  if (kind_ != Kind::Fp) return a * b;
  return Rational(mod_nonneg(a.get_num() * b.get_num(), p_));
}

Rational Ring::neg(const Rational& a) const {
  if (kind_ != Kind::Fp) return -a;
  return Rational(mod_nonneg(-a.get_num(), p_));
}

Rational Ring::inv(const Rational& a) const {
  if (a == 0) throw DomainError("division_by_zero", "inverse of zero");
  switch (kind_) {
    case Kind::Z:
      if (a == 1 || a == -1) return a;
      throw DomainError("not_invertible", a.get_str() + " is not a unit in Z");
    case Kind::Q:
      return 1 / a;
    case Kind::Fp: {
      Integer r;
      Integer pp = p_;
      mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), pp.get_mpz_t());
      return Rational(r);
    }
  }
  return a;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Ring ring)
    : rows_(rows), cols_(cols), ring_(ring), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n, Ring ring) {
  Matrix m(n, n, ring);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, Ring ring) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, ring);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DomainError("dimension_mismatch", "ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& value) {
  data_[r * cols_ + c] = ring_.reduce(value);
}

std::vector<Rational> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, ring_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

Matrix Matrix::with_ring(Ring ring) const {
  Matrix m(rows_, cols_, ring);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = ring.reduce(data_[i]);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) {
    throw DomainError("dimension_mismatch", "block out of range");
  }
  Matrix m(rows, cols, ring_);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = (*this)(r0 + r, c0 + c);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || !(ring_ == other.ring_)) {
    throw DomainError("dimension_mismatch", "matrix sum shape or ring mismatch");
  }
  Matrix m(rows_, cols_, ring_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = ring_.add(data_[i], other.data_[i]);
  return m;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || !(ring_ == other.ring_)) {
    throw DomainError("dimension_mismatch", "matrix difference shape or ring mismatch");
  }
  Matrix m(rows_, cols_, ring_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = ring_.sub(data_[i], other.data_[i]);
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_ || !(ring_ == other.ring_)) {
    throw DomainError("dimension_mismatch", "matrix product shape or ring mismatch");
  }
  Matrix m(rows_, other.cols_, ring_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        const Rational& b = other(k, c);
        if (b != 0) m.data_[r * other.cols_ + c] += a * b;
      }
    }
  }
  if (ring_.kind() == Ring::Kind::Fp) {
    for (auto& x : m.data_) x = ring_.reduce(x);
  }
  return m;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw DomainError("dimension_mismatch", "vector length mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    out[r] = ring_.reduce(out[r]);
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix(0, 0);
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    if (!(b.ring() == blocks.front().ring())) {
      throw DomainError("dimension_mismatch", "block ring mismatch");
    }
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(rows, cols, blocks.front().ring());
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m.set(r0 + r, c0 + c, b(r, c));
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

}  // namespace kcalc
