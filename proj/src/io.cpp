#include "kcalc/io.hpp"

#include <fstream>

namespace kcalc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw DomainError("invalid_json", what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Integer integer_from_json(const json& j) {
  const Rational x = rational_from_json(j);
  if (x.get_den() != 1) bad("expected an integer, got " + x.get_str());
  return x.get_num();
}

Complex complex_from_json(const json& j) {
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object()) return {j.value("re", 0.0), j.value("im", 0.0)};
  if (j.is_number()) return {j.get<double>(), 0.0};
  bad("expected a complex number as [re, im] or {re, im}");
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_xcd_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXcd matrix_xcd_from_json(const json& j, std::size_t rank) {
  if (!j.is_array() || j.size() != rank) bad("sample matrix must have " + std::to_string(rank) + " rows");
  const auto n = static_cast<Eigen::Index>(rank);
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != rank) bad("sample matrix must be square");
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json integers_to_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::vector<Integer> integers_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of integers");
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("file_not_found", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

std::string rational_to_string(const Rational& x) { return x.get_str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (!j.is_string()) bad("exact numbers must be integers or decimal strings, got " + j.dump());
  const auto text = j.get<std::string>();
  Rational x;
  if (text.empty() || x.set_str(text, 10) != 0) bad("not a rational number: '" + text + "'");
  if (x.get_den() == 0) bad("zero denominator in '" + text + "'");
  x.canonicalize();
  return x;
}

void to_json(json& j, const Ring& r) { j = r.to_string(); }

Ring ring_from_json(const json& j) {
  if (!j.is_string()) bad("ring tag must be a string");
  return Ring::parse(j.get<std::string>());
}

void to_json(json& j, const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(r, c)));
    rows.push_back(row);
  }
  j = {{"ring", m.ring().to_string()}, {"entries", rows}};
}

void from_json(const json& j, Matrix& m) {
  const Ring ring = j.contains("ring") ? ring_from_json(j.at("ring")) : Ring::rationals();
  const json& rows = j.is_array() ? j : field(j, "entries");
  if (!rows.is_array()) bad("matrix entries must be an array of rows");
  std::vector<std::vector<Rational>> values;
  for (const auto& row : rows) {
    if (!row.is_array()) bad("matrix row must be an array");
    std::vector<Rational> v;
    for (const auto& x : row) v.push_back(rational_from_json(x));
    if (!values.empty() && v.size() != values.front().size()) bad("ragged matrix rows");
    values.push_back(std::move(v));
  }
  m = Matrix::from_rows(values, ring);
}

void to_json(json& j, const AbelianGroup& g) {
  j = {{"group", g.to_string()}, {"free_rank", g.free_rank}, {"torsion", integers_to_json(g.torsion)}};
}

void from_json(const json& j, AbelianGroup& g) {
  g = AbelianGroup::from_invariant_factors(field(j, "free_rank").get<std::size_t>(),
                                           integers_from_json(field(j, "torsion")));
}

void to_json(json& j, const MonoidPresentation& m) {
  json rels = json::array();
  for (const auto& r : m.relations) rels.push_back({{"lhs", integers_to_json(r.lhs)}, {"rhs", integers_to_json(r.rhs)}});
  j = {{"generators", m.generators}, {"relations", rels}};
}

void from_json(const json& j, MonoidPresentation& m) {
  const json& g = field(j, "generators");
  if (!g.is_number_unsigned()) bad("'generators' must be a non-negative integer");
  m.generators = g.get<std::size_t>();
  m.relations.clear();
  if (j.contains("relations")) {
    for (const auto& r : j.at("relations")) {
      m.relations.push_back({integers_from_json(field(r, "lhs")), integers_from_json(field(r, "rhs"))});
    }
  }
  m.validate();
}

void to_json(json& j, const Poly& p) {
  j = json::array();
  for (const auto& [exps, c] : p.terms()) j.push_back({{"exps", exps}, {"coeff", rational_to_string(c)}});
}

void from_json(const json& j, Poly& p) {
  if (!j.is_array()) bad("polynomial must be an array of {exps, coeff} terms");
  p = Poly();
  for (const auto& t : j) {
    const json& e = field(t, "exps");
    for (const auto& x : e) {
      if (!x.is_number_unsigned()) bad("exponents must be non-negative integers");
    }
    p.add_term(e.get<Poly::Exponents>(), rational_from_json(field(t, "coeff")));
  }
}

void to_json(json& j, const SymPoly& p) { to_json(j, p.poly); }
void from_json(const json& j, SymPoly& p) { from_json(j, p.poly); }

void to_json(json& j, const VirtualSplitBundle& v) {
  json terms = json::array();
  for (const auto& [exps, mult] : v.terms()) terms.push_back({{"mult", mult.get_str()}, {"exps", exps}});
  j = {{"base_lines", v.base_lines()}, {"terms", terms}};
}

void from_json(const json& j, VirtualSplitBundle& v) {
  const auto k = field(j, "base_lines").get<std::size_t>();
  v = VirtualSplitBundle(k);
  for (const auto& t : field(j, "terms")) {
    auto exps = field(t, "exps").get<LineMonomial>();
    if (exps.size() != k) bad("each term needs exactly base_lines exponents");
    v.add(std::move(exps), integer_from_json(field(t, "mult")));
  }
}

void to_json(json& j, const GradedClass& c) {
  json comps = json::array();
  for (const auto& p : c.components()) comps.push_back(p);
  j = {{"variables", c.variables}, {"truncation", c.truncation}, {"components", comps}};
}

void from_json(const json& j, GradedClass& c) {
  c.variables = field(j, "variables").get<std::size_t>();
  c.truncation = field(j, "truncation").get<unsigned>();
  c.poly = Poly();
  for (const auto& comp : field(j, "components")) c.poly += comp.get<Poly>();
}

void to_json(json& j, const LaurentSymbol& f) {
  json coeffs = json::array();
  for (const auto& [k, a] : f.terms()) coeffs.push_back({{"k", k}, {"re", a.real()}, {"im", a.imag()}});
  j = {{"coeffs", coeffs}};
}

void from_json(const json& j, LaurentSymbol& f) {
  std::vector<std::pair<int, Complex>> terms;
  for (const auto& t : field(j, "coeffs")) {
    terms.emplace_back(field(t, "k").get<int>(), Complex(t.value("re", 0.0), t.value("im", 0.0)));
  }
  f = LaurentSymbol::from_terms(terms);
}

void to_json(json& j, const MatrixSymbol& f) {
  json rows = json::array();
  for (std::size_t r = 0; r < f.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < f.size(); ++c) row.push_back(f(r, c));
    rows.push_back(row);
  }
  j = {{"matrix", rows}};
}

void from_json(const json& j, MatrixSymbol& f) {
  std::vector<std::vector<LaurentSymbol>> entries;
  for (const auto& row : field(j, "matrix")) {
    std::vector<LaurentSymbol> r;
    for (const auto& e : row) r.push_back(e.get<LaurentSymbol>());
    entries.push_back(std::move(r));
  }
  f = MatrixSymbol(std::move(entries));
}

MatrixSymbol any_symbol_from_json(const json& j) {
  if (j.is_object() && j.contains("matrix")) return parse_as<MatrixSymbol>(j);
  return MatrixSymbol::diagonal({parse_as<LaurentSymbol>(j)});
}

void to_json(json& j, const CocycleData& d) {
  json overlaps = json::array();
  for (const auto& t : d.transitions) {
    json samples = json::array();
    for (const auto& [param, m] : t.samples) samples.push_back({{"param", param}, {"matrix", matrix_xcd_to_json(m)}});
    overlaps.push_back({{"a", t.a}, {"b", t.b}, {"samples", samples}});
  }
  j = {{"charts", d.charts}, {"rank", d.rank}, {"overlaps", overlaps}};
}

void from_json(const json& j, CocycleData& d) {
  d.charts = field(j, "charts").get<std::vector<std::string>>();
  d.rank = j.value("rank", std::size_t{1});
  d.transitions.clear();
  for (const auto& o : field(j, "overlaps")) {
    auto a = field(o, "a").get<std::string>();
    auto b = field(o, "b").get<std::string>();
    if (o.contains("symbol")) {
      const MatrixSymbol g = any_symbol_from_json(o.at("symbol"));
      if (g.size() != d.rank) bad("symbol size does not match rank");
      d.transitions.push_back(CocycleData::sample_symbol(a, b, g, field(o, "params").get<std::vector<double>>()));
      continue;
    }
    Transition t{a, b, {}};
    for (const auto& s : field(o, "samples")) {
      t.samples.emplace(field(s, "param").get<double>(), matrix_xcd_from_json(field(s, "matrix"), d.rank));
    }
    d.transitions.push_back(std::move(t));
  }
}

void to_json(json& j, const ArgumentPrincipleResult& r) {
  j = {{"winding", r.winding}, {"residual", r.residual}, {"samples", r.samples}};
}

void from_json(const json& j, ArgumentPrincipleResult& r) {
  r = {field(j, "winding").get<long>(), field(j, "residual").get<double>(), field(j, "samples").get<std::size_t>()};
}

void to_json(json& j, const IndexResult& r) {
  j = {{"index", r.index},       {"winding", r.winding}, {"root_count_winding", r.root_count_winding},
       {"residual", r.residual}, {"samples", r.samples}};
}

void from_json(const json& j, IndexResult& r) {
  r.index = field(j, "index").get<long>();
  r.winding = field(j, "winding").get<long>();
  r.root_count_winding = field(j, "root_count_winding").get<long>();
  r.residual = field(j, "residual").get<double>();
  r.samples = field(j, "samples").get<std::size_t>();
}

void to_json(json& j, const StructuredIndexResult& r) {
  j = {{"index", r.index},
       {"kernel_dim", r.kernel_dim},
       {"cokernel_dim", r.cokernel_dim},
       {"window", r.window}};
}

void from_json(const json& j, StructuredIndexResult& r) {
  r.index = field(j, "index").get<long>();
  r.kernel_dim = field(j, "kernel_dim").get<std::size_t>();
  r.cokernel_dim = field(j, "cokernel_dim").get<std::size_t>();
  r.window = field(j, "window").get<std::size_t>();
}

void to_json(json& j, const CocycleReport& r) {
  j = {{"passed", r.passed},
       {"worst_deviation", r.worst_deviation},
       {"worst_relation", r.worst_relation},
       {"worst_parameter", r.worst_parameter ? json(*r.worst_parameter) : json(nullptr)},
       {"triples_checked", r.triples_checked},
       {"points_checked", r.points_checked}};
}

void from_json(const json& j, CocycleReport& r) {
  r.passed = field(j, "passed").get<bool>();
  r.worst_deviation = field(j, "worst_deviation").get<double>();
  r.worst_relation = field(j, "worst_relation").get<std::vector<std::string>>();
  const json& p = field(j, "worst_parameter");
  r.worst_parameter = p.is_null() ? std::nullopt : std::optional<double>(p.get<double>());
  r.triples_checked = field(j, "triples_checked").get<std::size_t>();
  r.points_checked = field(j, "points_checked").get<std::size_t>();
}

void to_json(json& j, const ClutchingClass& c) { j = {{"rank", c.rank}, {"degree", c.degree}}; }

void from_json(const json& j, ClutchingClass& c) {
  c = {field(j, "rank").get<std::size_t>(), field(j, "degree").get<long>()};
}

void to_json(json& j, const HopfReport& r) {
  json table = json::array();
  for (const auto& [n, v] : r.v2_table) table.push_back({{"n", n}, {"v2", v}});
  j = {{"bound", r.bound},
       {"solutions", r.solutions},
       {"v2_table", table},
       {"closed_form_agrees", r.closed_form_agrees},
       {"first_mismatch", r.first_mismatch ? json(*r.first_mismatch) : json(nullptr)}};
}

void from_json(const json& j, HopfReport& r) {
  r.bound = field(j, "bound").get<unsigned long>();
  r.solutions = field(j, "solutions").get<std::vector<unsigned long>>();
  r.v2_table.clear();
  for (const auto& e : field(j, "v2_table")) r.v2_table.emplace_back(field(e, "n").get<unsigned long>(), field(e, "v2").get<unsigned long>());
  r.closed_form_agrees = field(j, "closed_form_agrees").get<bool>();
  const json& m = field(j, "first_mismatch");
  r.first_mismatch = m.is_null() ? std::nullopt : std::optional<unsigned long>(m.get<unsigned long>());
}

// Indices are 1-based on the wire, matching the e^a_ij notation.
void to_json(json& j, const Transvection& t) {
  j = {{"i", t.i + 1}, {"j", t.j + 1}, {"a", rational_to_string(t.a)}};
}

void from_json(const json& j, Transvection& t) {
  const auto i = field(j, "i").get<std::size_t>();
  const auto jj = field(j, "j").get<std::size_t>();
  if (i == 0 || jj == 0 || i == jj) bad("transvection indices must be distinct and 1-based");
  t = {i - 1, jj - 1, rational_from_json(field(j, "a"))};
}

void to_json(json& j, const FactorizationResult& r) {
  j = {{"factors", r.factors}, {"diagonal", r.diagonal}};
}

void from_json(const json& j, FactorizationResult& r) {
  r.factors = field(j, "factors").get<std::vector<Transvection>>();
  r.diagonal = field(j, "diagonal").get<Matrix>();
}

void to_json(json& j, const SteinbergReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"relation", v.relation},
                          {"i", v.i + 1},
                          {"j", v.j + 1},
                          {"k", v.k + 1},
                          {"l", v.l + 1},
                          {"a", rational_to_string(v.a)},
                          {"b", rational_to_string(v.b)}});
  }
  j = {{"n", r.n},
       {"trials", r.trials},
       {"commutators_checked", r.commutators_checked},
       {"additivity_checked", r.additivity_checked},
       {"violations", violations}};
}

void from_json(const json& j, SteinbergReport& r) {
  r.n = field(j, "n").get<std::size_t>();
  r.trials = field(j, "trials").get<std::size_t>();
  r.commutators_checked = field(j, "commutators_checked").get<std::size_t>();
  r.additivity_checked = field(j, "additivity_checked").get<std::size_t>();
  r.violations.clear();
  for (const auto& v : field(j, "violations")) {
    r.violations.push_back({field(v, "relation").get<std::string>(), field(v, "i").get<std::size_t>() - 1,
                            field(v, "j").get<std::size_t>() - 1, field(v, "k").get<std::size_t>() - 1,
                            field(v, "l").get<std::size_t>() - 1, rational_from_json(field(v, "a")),
                            rational_from_json(field(v, "b"))});
  }
}

void to_json(json& j, const K1Result& r) { j = {{"group", r.group}, {"generator", r.generator}}; }

void from_json(const json& j, K1Result& r) {
  r.group = field(j, "group").get<AbelianGroup>();
  r.generator = field(j, "generator").get<FieldElement>();
}

}  // namespace kcalc
