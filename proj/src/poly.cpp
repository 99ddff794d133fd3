#include "kcalc/poly.hpp"

#include <algorithm>

namespace kcalc {

namespace {

void trim(Poly::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

unsigned graded_degree(const Poly::Exponents& exps, Grading grading) {
  unsigned d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    d += grading == Grading::Total ? exps[i] : exps[i] * static_cast<unsigned>(i + 1);
  }
  return d;
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.add_term({}, c);
  return p;
}

Poly Poly::variable(std::size_t index, const Rational& coeff) {
  Exponents e(index + 1, 0);
  e[index] = 1;
  return monomial(std::move(e), coeff);
}

Poly Poly::monomial(Exponents exps, const Rational& coeff) {
  Poly p;
  p.add_term(std::move(exps), coeff);
  return p;
}

void Poly::add_term(Exponents exps, const Rational& raw) {
  Rational coeff = raw;
  coeff.canonicalize();
  if (coeff == 0) return;
  trim(exps);
  auto [it, inserted] = terms_.try_emplace(std::move(exps), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Poly::coefficient(const Exponents& exps) const {
  Exponents key = exps;
  trim(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Poly::variable_count() const {
  std::size_t n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, e.size());
  return n;
}

unsigned Poly::degree(Grading grading) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, graded_degree(e, grading));
  return d;
}

Poly Poly::homogeneous_part(unsigned d, Grading grading) const {
  Poly out;
  for (const auto& [e, c] : terms_)
    if (graded_degree(e, grading) == d) out.terms_.emplace(e, c);
  return out;
}

Poly Poly::truncated(unsigned bound, Grading grading) const {
  Poly out;
  for (const auto& [e, c] : terms_)
    if (graded_degree(e, grading) <= bound) out.terms_.emplace(e, c);
  return out;
}

Poly Poly::swap_variables(std::size_t i, std::size_t j) const {
  Poly out;
  const std::size_t width = std::max(i, j) + 1;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    if (f.size() < width) f.resize(width, 0);
    std::swap(f[i], f[j]);
    out.add_term(std::move(f), c);
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::multiply(const Poly& a, const Poly& b, Grading grading, unsigned bound) {
  Poly out;
  std::vector<unsigned> bdeg;
  bdeg.reserve(b.terms_.size());
  for (const auto& [e, c] : b.terms_) bdeg.push_back(graded_degree(e, grading));
  Exponents prod;
  for (const auto& [ea, ca] : a.terms_) {
    const unsigned da = graded_degree(ea, grading);
    if (da > bound) continue;
    std::size_t k = 0;
    for (const auto& [eb, cb] : b.terms_) {
      if (da + bdeg[k++] > bound) continue;
      prod.assign(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) prod[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) prod[i] += eb[i];
      out.add_term(prod, ca * cb);
    }
  }
  return out;
}

Poly Poly::power(const Poly& a, unsigned exponent, Grading grading, unsigned bound) {
  Poly result = constant(1);
  Poly base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = multiply(result, base, grading, bound);
    exponent >>= 1;
    if (exponent > 0) base = multiply(base, base, grading, bound);
  }
  return result;
}

std::string Poly::to_string(char letter) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Low degree first reads more naturally for truncated series.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    return graded_degree(x.first, Grading::Total) < graded_degree(y.first, Grading::Total);
  });
  for (const auto& [e, c] : ordered) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += letter + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace kcalc
