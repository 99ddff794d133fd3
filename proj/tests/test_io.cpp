#include "helpers.hpp"
#include "kcalc/io.hpp"

using namespace kcalc;

namespace {

template <class T>
T round_trip(const T& x) {
  const json j = x;
  return parse_as<T>(json::parse(j.dump()));
}

}  // namespace

TEST_CASE("rationals travel as strings") {
  CHECK(rational_to_string(Rational(-7, 4)) == "-7/4");
  CHECK(rational_from_json(json("6/4")) == Rational(3, 2));
  CHECK(rational_from_json(json(5)) == 5);
  CHECK_DOMAIN_ERROR(rational_from_json(json("1/0")), "invalid_json");
  CHECK_DOMAIN_ERROR(rational_from_json(json("abc")), "invalid_json");
}

TEST_CASE("round trips of exact payloads") {
  const Matrix m = test::mat({{1, -2}, {3, 4}}, Ring::prime_field(5));
  CHECK(round_trip(m) == m);
  Matrix q(2, 1);
  q.set(0, 0, Rational(-1, 3));
  CHECK(round_trip(q) == q);
  const AbelianGroup g{2, test::ints({2, 6})};
  CHECK(round_trip(g) == g);
  const MonoidPresentation p{2, {{test::ints({2, 0}), test::ints({0, 2})}}};
  CHECK(round_trip(p) == p);
  const Poly poly = Poly::monomial({1, 2}, Rational(3, 5)) - Poly::constant(2);
  CHECK(round_trip(poly) == poly);
  CHECK(round_trip(SymPoly{poly}) == SymPoly{poly});
  VirtualSplitBundle v(2);
  v.add({1, -1}, 3);
  v.add({0, 0}, -2);
  CHECK(round_trip(v) == v);
  const GradedClass c{2, 5, poly};
  CHECK(round_trip(c) == c);
}

TEST_CASE("round trips of numeric payloads") {
  const auto f = LaurentSymbol::from_terms({{-1, Complex(0.5, -1.25)}, {2, Complex(3.0, 0.0)}});
  CHECK(round_trip(f) == f);
  const MatrixSymbol ms({{f, LaurentSymbol::constant(1.0)}, {LaurentSymbol(), LaurentSymbol::monomial(1)}});
  CHECK(round_trip(ms) == ms);
  CHECK(round_trip(ArgumentPrincipleResult{3, 1e-9, 512}) == ArgumentPrincipleResult{3, 1e-9, 512});
  const IndexResult ir{-1, 1, 1, 2e-12, 256};
  CHECK(round_trip(ir) == ir);
  const StructuredIndexResult sr{-2, 0, 2, 9};
  CHECK(round_trip(sr) == sr);
  CocycleReport cr;
  cr.passed = false;
  cr.worst_deviation = 0.25;
  cr.worst_relation = {"c", "b", "a"};
  cr.worst_parameter = 1.5;
  cr.triples_checked = 1;
  cr.points_checked = 16;
  CHECK(round_trip(cr) == cr);
  CocycleReport empty;
  CHECK(round_trip(empty) == empty);
  CHECK(round_trip(ClutchingClass{2, -3}) == ClutchingClass{2, -3});
}

TEST_CASE("round trips of table and matrix-group payloads") {
  HopfReport h;
  h.bound = 10;
  h.solutions = {1, 2, 4};
  h.v2_table = {{1, 1}, {2, 3}};
  CHECK(round_trip(h) == h);
  const Transvection t{0, 2, Rational(-3, 2)};
  CHECK(round_trip(t) == t);
  CHECK(json(t)["i"] == 1);
  FactorizationResult fr;
  fr.factors = {t, {1, 0, 4}};
  fr.diagonal = Matrix::identity(3);
  CHECK(round_trip(fr) == fr);
  SteinbergReport sr;
  sr.n = 3;
  sr.trials = 2;
  sr.commutators_checked = 60;
  sr.violations.push_back({"[e_ij, e_jl] = e_il", 0, 1, 1, 2, 3, -4});
  CHECK(round_trip(sr) == sr);
  const K1Result k{AbelianGroup::cyclic(8), {1, 1}};
  CHECK(round_trip(k) == k);
}

TEST_CASE("cocycle data round trip") {
  CocycleData d;
  d.charts = {"u", "v"};
  d.rank = 1;
  d.transitions.push_back(CocycleData::sample_symbol("u", "v", MatrixSymbol({{LaurentSymbol::monomial(1)}}), {0.0, 1.0}));
  const auto back = round_trip(d);
  CHECK(back.charts == d.charts);
  CHECK(back.rank == 1);
  REQUIRE(back.transitions.size() == 1);
  CHECK(back.transitions[0].samples.size() == 2);
  CHECK(back.transitions[0].samples.at(1.0).isApprox(d.transitions[0].samples.at(1.0)));
}

TEST_CASE("symbols given by samples of a symbol") {
  const json j = json::parse(R"({"charts":["u","v"],"rank":1,"overlaps":[
      {"a":"u","b":"v","symbol":{"coeffs":[{"k":1,"re":1,"im":0}]},"params":[0.0, 0.5]}]})");
  const auto d = parse_as<CocycleData>(j);
  REQUIRE(d.transitions.size() == 1);
  CHECK(std::abs(d.transitions[0].samples.at(0.5)(0, 0) - std::polar(1.0, 0.5)) < 1e-15);
}

TEST_CASE("malformed input") {
  CHECK_DOMAIN_ERROR(parse_as<Matrix>(json::parse(R"({"ring":"Z","entries":[[1,2],[3]]})")), "invalid_json");
  CHECK_DOMAIN_ERROR(parse_as<Matrix>(json::parse(R"({"ring":"Z","entries":"x"})")), "invalid_json");
  CHECK_DOMAIN_ERROR(parse_as<MonoidPresentation>(json::parse(R"({"relations":[]})")), "invalid_json");
  CHECK_DOMAIN_ERROR(parse_as<LaurentSymbol>(json::parse(R"({"coeffs":[{"k":"a"}]})")), "invalid_json");
  // an absent relation list means no relations
  CHECK(parse_as<MonoidPresentation>(json::parse(R"({"generators":2})")).relations.empty());
  CHECK_DOMAIN_ERROR(load_json_file("/nonexistent/input.json"), "file_not_found");
  const auto scalar = any_symbol_from_json(json::parse(R"({"coeffs":[{"k":1,"re":1,"im":0}]})"));
  CHECK(scalar.size() == 1);
}
