#include <cmath>

#include "helpers.hpp"
#include "kcalc/clutching.hpp"

using namespace kcalc;

namespace {

using LS = LaurentSymbol;

std::vector<double> angles(std::size_t n) {
  std::vector<double> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n));
  return out;
}

MatrixSymbol scalar(const LS& f) { return MatrixSymbol({{f}}); }

// Three charts with g_ab = z, g_bc = z^2 and g_ac = z^3, plus inverses.
CocycleData three_charts() {
  CocycleData d;
  d.charts = {"a", "b", "c"};
  d.rank = 1;
  const auto t = angles(16);
  auto add = [&](const char* a, const char* b, int k) {
    d.transitions.push_back(CocycleData::sample_symbol(a, b, scalar(LS::monomial(k)), t));
    d.transitions.push_back(CocycleData::sample_symbol(b, a, scalar(LS::monomial(-k)), t));
  };
  add("a", "b", 1);
  add("b", "c", 2);
  add("a", "c", 3);
  return d;
}

}  // namespace

TEST_CASE("identity atlas is a cocycle") {
  CocycleData d;
  d.charts = {"u", "v"};
  d.rank = 2;
  d.transitions.push_back(CocycleData::sample_symbol("u", "v", MatrixSymbol::identity(2), angles(8)));
  d.transitions.push_back(CocycleData::sample_symbol("v", "u", MatrixSymbol::identity(2), angles(8)));
  const auto r = validate_cocycle(d, 1e-12);
  CHECK(r.passed);
  CHECK(r.worst_deviation < 1e-12);
}

TEST_CASE("two charts glued by z") {
  CocycleData d;
  d.charts = {"north", "south"};
  d.transitions.push_back(CocycleData::sample_symbol("north", "south", scalar(LS::monomial(1)), angles(32)));
  d.transitions.push_back(CocycleData::sample_symbol("south", "north", scalar(LS::monomial(-1)), angles(32)));
  CHECK(validate_cocycle(d, 1e-10).passed);
}

TEST_CASE("three-chart atlas passes and a corruption is caught") {
  auto d = three_charts();
  const auto good = validate_cocycle(d, 1e-10);
  CHECK(good.passed);
  CHECK(good.triples_checked > 0);

  // scale every sample of g_ac by 1 + eps; |g| = 1 so the deviation is eps
  const double eps = 1e-3;
  for (auto& t : d.transitions)
    if (t.a == "a" && t.b == "c")
      for (auto& [param, m] : t.samples) m *= (1.0 + eps);
  const auto bad = validate_cocycle(d, 1e-6);
  CHECK_FALSE(bad.passed);
  CHECK(bad.worst_deviation == doctest::Approx(eps).epsilon(1e-6));
  CHECK(bad.worst_parameter.has_value());
  CHECK_FALSE(bad.worst_relation.empty());
}

TEST_CASE("inconsistent sampling is reported") {
  auto d = three_charts();
  for (auto& t : d.transitions) {
    if ((t.a == "a" && t.b == "c") || (t.a == "c" && t.b == "a")) {
      std::map<double, Eigen::MatrixXcd> shifted;
      for (auto& [param, m] : t.samples) shifted.emplace(param + 0.01, m);
      t.samples = shifted;
    }
  }
  CHECK_DOMAIN_ERROR(validate_cocycle(d, 1e-10), "inconsistent_sampling");
}

TEST_CASE("classification over the two-sphere") {
  CHECK(classify_over_s2(MatrixSymbol::identity(1)) == ClutchingClass{1, 0});
  CHECK(classify_over_s2(scalar(LS::monomial(1))) == ClutchingClass{1, 1});
  CHECK(classify_over_s2(scalar(LS::monomial(-2))) == ClutchingClass{1, -2});
  CHECK(classify_over_s2(MatrixSymbol::diagonal({LS::monomial(1), LS::monomial(-1)})) == ClutchingClass{2, 0});
}

TEST_CASE("stabilization keeps the degree") {
  const MatrixSymbol f = MatrixSymbol::diagonal({LS::monomial(2), LS::constant(3.0)});
  const auto base = classify_over_s2(f);
  const auto stable = classify_over_s2(f.stabilized());
  CHECK(stable.rank == base.rank + 1);
  CHECK(stable.degree == base.degree);
  CHECK(base.degree == 2);
}
