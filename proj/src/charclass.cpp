#include "kcalc/charclass.hpp"

#include <algorithm>

#include "kcalc/error.hpp"

namespace kcalc {

namespace {

LineMonomial pad(LineMonomial e, std::size_t k) {
  if (e.size() < k) e.resize(k, 0);
  return e;
}

LineMonomial monomial_power(const LineMonomial& e, long j) {
  LineMonomial out = e;
  for (auto& x : out) x *= j;
  return out;
}

Integer binomial(const Integer& n, unsigned long k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

Poly chern_root(const LineMonomial& e) {
  Poly r;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] != 0) r += Poly::variable(j, Rational(e[j]));
  }
  return r;
}

// prod over terms of (sum_j coeff(mult, j) t^j L^j), effective input only.
BundleSeries product_series(const VirtualSplitBundle& v, unsigned max_power, bool exterior) {
  BundleSeries acc(max_power + 1, VirtualSplitBundle(v.base_lines()));
  acc[0] = VirtualSplitBundle::trivial(v.base_lines(), 1);
  for (const auto& [exps, mult] : v.terms()) {
    BundleSeries factor(max_power + 1, VirtualSplitBundle(v.base_lines()));
    for (unsigned j = 0; j <= max_power; ++j) {
      Integer c = exterior ? binomial(mult, j) : binomial(Integer(mult + j - 1), j);
      if (c != 0) factor[j].add(monomial_power(exps, j), c);
    }
    acc = series_product(acc, factor);
  }
  return acc;
}

// sum_{i+j=k} (-1)^j a_i b_j, used for the virtual lambda and S formulas.
BundleSeries alternating_combination(const BundleSeries& a, const BundleSeries& b) {
  return series_product(a, series_negate_t(b));
}

}  // namespace

VirtualSplitBundle VirtualSplitBundle::trivial(std::size_t base_lines, const Integer& rank) {
  VirtualSplitBundle v(base_lines);
  v.add(LineMonomial(base_lines, 0), rank);
  return v;
}

VirtualSplitBundle VirtualSplitBundle::line(LineMonomial exps, const Integer& mult) {
  VirtualSplitBundle v(exps.size());
  v.add(std::move(exps), mult);
  return v;
}

void VirtualSplitBundle::add(LineMonomial exps, const Integer& mult) {
  if (exps.size() > base_lines_) {
    *this = padded(exps.size());
  }
  exps = pad(std::move(exps), base_lines_);
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(exps), mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer VirtualSplitBundle::dimension() const {
  Integer d = 0;
  for (const auto& [e, m] : terms_) d += m;
  return d;
}

bool VirtualSplitBundle::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

VirtualSplitBundle VirtualSplitBundle::padded(std::size_t base_lines) const {
  if (base_lines < base_lines_) {
    throw DomainError("dimension_mismatch", "cannot shrink the base line count");
  }
  VirtualSplitBundle out(base_lines);
  for (const auto& [e, m] : terms_) out.terms_.emplace(pad(e, base_lines), m);
  return out;
}

VirtualSplitBundle VirtualSplitBundle::positive_part() const {
  VirtualSplitBundle out(base_lines_);
  for (const auto& [e, m] : terms_)
    if (m > 0) out.terms_.emplace(e, m);
  return out;
}

VirtualSplitBundle VirtualSplitBundle::negative_part() const {
  VirtualSplitBundle out(base_lines_);
  for (const auto& [e, m] : terms_)
    if (m < 0) out.terms_.emplace(e, -m);
  return out;
}

VirtualSplitBundle VirtualSplitBundle::operator-() const {
  VirtualSplitBundle out = *this;
  for (auto& [e, m] : out.terms_) m = -m;
  return out;
}

bool operator==(const VirtualSplitBundle& a, const VirtualSplitBundle& b) {
  const std::size_t k = std::max(a.base_lines_, b.base_lines_);
  return a.padded(k).terms_ == b.padded(k).terms_;
}

std::string VirtualSplitBundle::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, m] : terms_) {
    if (!first) out += m < 0 ? " - " : " + ";
    else if (m < 0) out += "-";
    first = false;
    Integer mag = abs(m);
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "L" + std::to_string(j + 1);
      if (e[j] != 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      out += (mag == 1 ? "" : mag.get_str() + "*") + mono;
    }
  }
  return out;
}

VirtualSplitBundle bundle_sum(const VirtualSplitBundle& v, const VirtualSplitBundle& w) {
  VirtualSplitBundle out = v.padded(std::max(v.base_lines(), w.base_lines()));
  for (const auto& [e, m] : w.terms()) out.add(e, m);
  return out;
}

VirtualSplitBundle bundle_tensor(const VirtualSplitBundle& v, const VirtualSplitBundle& w) {
  const std::size_t k = std::max(v.base_lines(), w.base_lines());
  VirtualSplitBundle out(k);
  for (const auto& [ev, mv] : v.terms()) {
    for (const auto& [ew, mw] : w.terms()) {
      LineMonomial e = pad(ev, k);
      for (std::size_t j = 0; j < ew.size(); ++j) e[j] += ew[j];
      out.add(std::move(e), mv * mw);
    }
  }
  return out;
}

std::vector<Poly> GradedClass::components() const {
  std::vector<Poly> out;
  for (unsigned d = 0; d <= truncation; ++d) out.push_back(component(d));
  return out;
}

GradedClass graded_sum(const GradedClass& a, const GradedClass& b) {
  const unsigned n = std::min(a.truncation, b.truncation);
  return {std::max(a.variables, b.variables), n,
          (a.poly + b.poly).truncated(n, Grading::Total)};
}

GradedClass graded_product(const GradedClass& a, const GradedClass& b) {
  const unsigned n = std::min(a.truncation, b.truncation);
  return {std::max(a.variables, b.variables), n,
          Poly::multiply(a.poly, b.poly, Grading::Total, n)};
}

GradedClass total_chern(const VirtualSplitBundle& v, unsigned bound) {
  Poly c = Poly::constant(1);
  for (const auto& [e, m] : v.terms()) {
    Poly root = chern_root(e);
    if (root.is_zero()) continue;
    Poly factor;
    if (m > 0) {
      factor = Poly::constant(1) + root;
    } else {
      // (1 + r)^{-1} = sum_i (-r)^i
      Poly neg_power = Poly::constant(1);
      for (unsigned i = 0; i <= bound; ++i) {
        factor += neg_power;
        neg_power = Poly::multiply(neg_power, -root, Grading::Total, bound);
      }
    }
    Integer mag = abs(m);
    c = Poly::multiply(c, Poly::power(factor, static_cast<unsigned>(mag.get_ui()), Grading::Total, bound),
                       Grading::Total, bound);
  }
  return {v.base_lines(), bound, c};
}

GradedClass chern_character(const VirtualSplitBundle& v, unsigned bound) {
  Poly ch;
  for (const auto& [e, m] : v.terms()) {
    Poly root = chern_root(e);
    Poly power = Poly::constant(1);
    Rational factorial = 1;
    Poly exp_root;
    for (unsigned d = 0; d <= bound; ++d) {
      if (d > 0) {
        factorial *= d;
        power = Poly::multiply(power, root, Grading::Total, bound);
        if (power.is_zero()) break;
      }
      exp_root += power * Rational(1 / factorial);
    }
    ch += exp_root * Rational(m);
  }
  return {v.base_lines(), bound, ch};
}

BundleSeries series_product(const BundleSeries& a, const BundleSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t k = 0;
  for (const auto& x : a) k = std::max(k, x.base_lines());
  for (const auto& x : b) k = std::max(k, x.base_lines());
  BundleSeries out(n, VirtualSplitBundle(k));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] = bundle_sum(out[i + j], bundle_tensor(a[i], b[j]));
    }
  }
  return out;
}

BundleSeries series_negate_t(const BundleSeries& a) {
  BundleSeries out = a;
  for (std::size_t j = 1; j < out.size(); j += 2) out[j] = -out[j];
  return out;
}

BundleSeries lambda_series(const VirtualSplitBundle& v, unsigned max_power) {
  if (v.is_effective()) return product_series(v, max_power, true);
  return alternating_combination(product_series(v.positive_part(), max_power, true),
                                 product_series(v.negative_part(), max_power, false));
}

BundleSeries sym_series(const VirtualSplitBundle& v, unsigned max_power) {
  if (v.is_effective()) return product_series(v, max_power, false);
  return alternating_combination(product_series(v.positive_part(), max_power, false),
                                 product_series(v.negative_part(), max_power, true));
}

VirtualSplitBundle lambda_op(const VirtualSplitBundle& v, unsigned k) {
  return lambda_series(v, k)[k];
}

VirtualSplitBundle sym_op(const VirtualSplitBundle& v, unsigned k) {
  return sym_series(v, k)[k];
}

VirtualSplitBundle adams_op(const VirtualSplitBundle& v, unsigned k) {
  if (k == 0) throw DomainError("invalid_argument", "Adams operations need k >= 1");
  VirtualSplitBundle out(v.base_lines());
  for (const auto& [e, m] : v.terms()) out.add(monomial_power(e, static_cast<long>(k)), m);
  return out;
}

ChernData chern_data(const VirtualSplitBundle& v, unsigned bound) {
  return {v.dimension(), total_chern(v, bound)};
}

GradedClass adams_via_newton(const ChernData& data, unsigned k, unsigned bound) {
  if (k == 0) throw DomainError("invalid_argument", "Adams operations need k >= 1");
  const unsigned n = std::min(bound, data.total.truncation);
  std::vector<Poly> chern_classes;
  for (unsigned i = 1; i <= n; ++i) chern_classes.push_back(data.total.component(i));
  Poly out = Poly::constant(Rational(data.rank));
  if (n > 0) {
    auto power_sums = newton_power_sums(n);
    Rational scale = 1;
    for (unsigned d = 1; d <= n; ++d) {
      scale *= Rational(k, d);
      Poly p = evaluate_elementary(power_sums[d - 1], chern_classes, d);
      out += p.homogeneous_part(d, Grading::Total) * scale;
    }
  }
  return {data.total.variables, n, out};
}

Poly clear_factorials(const GradedClass& c) {
  Poly out;
  Integer factorial = 1;
  for (unsigned d = 0; d <= c.truncation; ++d) {
    if (d > 0) factorial *= d;
    out += c.component(d) * Rational(factorial);
  }
  return out;
}

SphereKElement sphere_sum(const SphereKElement& x, const SphereKElement& y) {
  if (x.n != y.n) throw DomainError("dimension_mismatch", "sphere dimensions differ");
  return {x.n, x.a + y.a, x.b + y.b};
}

SphereKElement sphere_product(const SphereKElement& x, const SphereKElement& y) {
  if (x.n != y.n) throw DomainError("dimension_mismatch", "sphere dimensions differ");
  return {x.n, x.a * y.a, x.a * y.b + x.b * y.a};
}

SphereKElement sphere_adams(const SphereKElement& e, unsigned k) {
  if (k == 0) throw DomainError("invalid_argument", "Adams operations need k >= 1");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), k, e.n);
  return {e.n, e.a, e.b * scale};
}

}  // namespace kcalc
