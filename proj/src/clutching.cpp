#include "kcalc/clutching.hpp"

#include <cmath>

#include "kcalc/error.hpp"

namespace kcalc {

namespace {

double max_entry_deviation(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
  return (x - y).cwiseAbs().maxCoeff();
}

struct Tracker {
  CocycleReport& report;
  double tol;

  void record(double deviation, std::vector<std::string> relation, double param) {
    ++report.points_checked;
    if (!report.worst_parameter || deviation > report.worst_deviation) {
      report.worst_deviation = deviation;
      report.worst_relation = std::move(relation);
      report.worst_parameter = param;
    }
    if (deviation > tol) report.passed = false;
  }
};

}  // namespace

Transition CocycleData::sample_symbol(std::string a, std::string b, const MatrixSymbol& g,
                                      const std::vector<double>& angles) {
  Transition t{std::move(a), std::move(b), {}};
  for (double theta : angles) t.samples.emplace(theta, g.evaluate(std::polar(1.0, theta)));
  return t;
}

CocycleReport validate_cocycle(const CocycleData& data, double tol) {
  if (!(tol >= 0.0)) throw DomainError("invalid_argument", "tolerance must be nonnegative");
  std::map<std::pair<std::string, std::string>, const Transition*> by_pair;
  for (const auto& t : data.transitions) {
    for (const auto& [param, m] : t.samples) {
      if (m.rows() != static_cast<Eigen::Index>(data.rank) || m.cols() != static_cast<Eigen::Index>(data.rank)) {
        throw DomainError("dimension_mismatch", "transition matrix size differs from rank");
      }
    }
    by_pair[{t.a, t.b}] = &t;
  }
  const auto find = [&](const std::string& a, const std::string& b) -> const Transition* {
    auto it = by_pair.find({a, b});
    return it == by_pair.end() ? nullptr : it->second;
  };

  CocycleReport report;
  Tracker tracker{report, tol};
  const Eigen::MatrixXcd one = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(data.rank),
                                                          static_cast<Eigen::Index>(data.rank));

  for (const auto& t : data.transitions) {
    if (t.a == t.b) {
      for (const auto& [param, m] : t.samples) tracker.record(max_entry_deviation(m, one), {t.a, t.a}, param);
      continue;
    }
    const Transition* back = find(t.b, t.a);
    if (!back || t.a > t.b) continue;
    for (const auto& [param, m] : t.samples) {
      auto it = back->samples.find(param);
      if (it == back->samples.end()) continue;
      tracker.record(max_entry_deviation(m * it->second, one), {t.a, t.b, t.a}, param);
    }
  }

  // g_cb g_ba = g_ca for distinct a, b, c with all three transitions present.
  for (const auto& a : data.charts) {
    for (const auto& b : data.charts) {
      for (const auto& c : data.charts) {
        if (a == b || b == c || a == c) continue;
        const Transition* ba = find(b, a);
        const Transition* cb = find(c, b);
        const Transition* ca = find(c, a);
        if (!ba || !cb || !ca) continue;
        ++report.triples_checked;
        std::size_t common = 0;
        for (const auto& [param, g_ba] : ba->samples) {
          auto it_cb = cb->samples.find(param);
          auto it_ca = ca->samples.find(param);
          if (it_cb == cb->samples.end() || it_ca == ca->samples.end()) continue;
          ++common;
          tracker.record(max_entry_deviation(it_cb->second * g_ba, it_ca->second), {c, b, a}, param);
        }
        if (common == 0) {
          throw DomainError("inconsistent_sampling",
                            "triple overlap (" + a + ", " + b + ", " + c + ") shares no sample points");
        }
      }
    }
  }
  return report;
}

ClutchingClass classify_over_s2(const MatrixSymbol& f) {
  if (f.size() == 0) throw DomainError("invalid_argument", "clutching function needs rank >= 1");
  return {f.size(), matrix_symbol_index(f).winding};
}

}  // namespace kcalc
