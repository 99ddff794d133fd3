#include "kcalc/symfun.hpp"

#include <map>
#include <utility>

#include "kcalc/error.hpp"

namespace kcalc {

namespace {

void enumerate_subsets(std::size_t m, std::size_t size, std::size_t start, Poly::Exponents& current,
                       std::size_t chosen, Poly& out) {
  if (chosen == size) {
    out.add_term(current, 1);
    return;
  }
  for (std::size_t v = start; v + (size - chosen) <= m; ++v) {
    current[v] = 1;
    enumerate_subsets(m, size, v + 1, current, chosen + 1, out);
    current[v] = 0;
  }
}

// Caches powers of the substituted values so repeated monomials share work.
class PowerCache {
 public:
  PowerCache(const std::vector<Poly>& values, unsigned bound) : values_(values), bound_(bound) {}

  const Poly& get(std::size_t var, unsigned exponent) {
    auto key = std::make_pair(var, exponent);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Poly value;
    if (exponent == 0) {
      value = Poly::constant(1);
    } else if (var >= values_.size()) {
      value = Poly();
    } else {
      value = Poly::multiply(get(var, exponent - 1), values_[var], Grading::Total, bound_);
    }
    return cache_.emplace(key, std::move(value)).first->second;
  }

 private:
  const std::vector<Poly>& values_;
  unsigned bound_;
  std::map<std::pair<std::size_t, unsigned>, Poly> cache_;
};

}  // namespace

Poly elementary_symmetric(std::size_t i, std::size_t m) {
  if (i == 0) return Poly::constant(1);
  Poly out;
  if (i > m) return out;
  Poly::Exponents current(m, 0);
  enumerate_subsets(m, i, 0, current, 0, out);
  return out;
}

SymPoly newton_power_sum(unsigned k) {
  if (k == 0) throw DomainError("invalid_argument", "power sums start at k = 1");
  return newton_power_sums(k).back();
}

std::vector<SymPoly> newton_power_sums(unsigned k) {
  std::vector<Poly> p(k + 1);
  for (unsigned n = 1; n <= k; ++n) {
    Poly acc = Poly::variable(n - 1, Rational((n % 2 == 1) ? n : -static_cast<long>(n)));
    for (unsigned i = 1; i < n; ++i) {
      Poly term = Poly::multiply(Poly::variable(i - 1), p[n - i], Grading::Elementary, n);
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    p[n] = std::move(acc);
  }
  std::vector<SymPoly> out;
  for (unsigned n = 1; n <= k; ++n) out.push_back(SymPoly{std::move(p[n])});
  return out;
}

Poly evaluate_elementary(const SymPoly& f, const std::vector<Poly>& values, unsigned bound) {
  PowerCache cache(values, bound);
  Poly out;
  for (const auto& [exps, coeff] : f.poly.terms()) {
    Poly term = Poly::constant(coeff);
    for (std::size_t i = 0; i < exps.size() && !term.is_zero(); ++i) {
      if (exps[i] == 0) continue;
      term = Poly::multiply(term, cache.get(i, exps[i]), Grading::Total, bound);
    }
    out += term;
  }
  return out;
}

RootExpansion expand_in_roots(const SymPoly& f, std::size_t m, unsigned bound) {
  if (m == 0) throw DomainError("invalid_argument", "need at least one root variable");
  std::vector<Poly> sigma;
  const std::size_t needed = f.poly.variable_count();
  for (std::size_t i = 1; i <= needed; ++i) sigma.push_back(elementary_symmetric(i, m));
  return RootExpansion{m, bound, evaluate_elementary(f, sigma, bound)};
}

bool is_symmetric(const RootExpansion& p) {
  for (std::size_t i = 0; i < p.variables; ++i)
    for (std::size_t j = i + 1; j < p.variables; ++j)
      if (!(p.poly.swap_variables(i, j) == p.poly)) return false;
  return p.poly.variable_count() <= p.variables;
}

SymPoly symmetrize_to_elementary(const RootExpansion& p) {
  if (!is_symmetric(p)) {
    throw DomainError("not_symmetric", "polynomial is not symmetric in its root variables");
  }
  const std::size_t m = p.variables;
  std::vector<Poly> sigma;
  for (std::size_t i = 1; i <= m; ++i) sigma.push_back(elementary_symmetric(i, m));
  const unsigned bound = p.poly.degree(Grading::Total);
  PowerCache cache(sigma, bound);

  SymPoly out;
  Poly rest = p.poly;
  while (!rest.is_zero()) {
    // Lex-leading exponent of a symmetric polynomial is a partition a_1 >= a_2 >= ...
    auto lead = *rest.terms().rbegin();
    Poly::Exponents a = lead.first;
    a.resize(m, 0);
    Poly::Exponents b(m, 0);
    for (std::size_t i = 0; i < m; ++i) b[i] = a[i] - (i + 1 < m ? a[i + 1] : 0);
    Poly product = Poly::constant(lead.second);
    for (std::size_t i = 0; i < m; ++i) {
      if (b[i] == 0) continue;
      product = Poly::multiply(product, cache.get(i, b[i]), Grading::Total, bound);
    }
    rest -= product;
    out.poly.add_term(b, lead.second);
  }
  return out;
}

}  // namespace kcalc
