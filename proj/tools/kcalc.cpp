// kcalc: command-line front end. Every subcommand reads JSON files, calls
// one library operation and prints either a human summary or a JSON run
// report. Exit codes: 0 ok, 1 domain error, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kcalc/charclass.hpp"
#include "kcalc/clutching.hpp"
#include "kcalc/error.hpp"
#include "kcalc/grothendieck.hpp"
#include "kcalc/io.hpp"
#include "kcalc/ktables.hpp"
#include "kcalc/selftest.hpp"
#include "kcalc/toeplitz.hpp"
#include "kcalc/whitehead.hpp"

using namespace kcalc;

namespace {

struct Outcome {
  json result;
  json diagnostics = json::object();
  std::string human;
  bool ok = true;
  std::string error_code;  // set when ok is false
};

// Input problems (missing or malformed files) are usage errors.
bool is_usage_code(const std::string& code) { return code == "invalid_json" || code == "file_not_found"; }

std::uint64_t default_seed() {
  if (const char* env = std::getenv("KCALC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError("invalid_json", std::string("KCALC_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

std::string components_text(const GradedClass& c) {
  std::ostringstream out;
  const auto parts = c.components();
  for (std::size_t d = 0; d < parts.size(); ++d) {
    if (parts[d].is_zero()) continue;
    out << "  degree " << d << ": " << parts[d].to_string('x') << "\n";
  }
  if (out.str().empty()) out << "  0\n";
  return out.str();
}

std::string group_line(const AbelianGroup& g) { return g.to_string() + "\n"; }

Outcome winding_outcome(const LaurentSymbol& f, const WindingOptions& opts, bool as_index) {
  const IndexResult r = toeplitz_index(f, opts);
  Outcome o;
  o.result = as_index ? json(r) : json{{"winding", r.winding}, {"root_count_winding", r.root_count_winding}};
  o.diagnostics = {{"residual", r.residual}, {"samples", r.samples}};
  std::ostringstream h;
  if (as_index) h << "index " << r.index << "\n";
  h << "winding (argument principle) " << r.winding << "\n"
    << "winding (root count) " << r.root_count_winding << "\n"
    << "residual " << r.residual << " at " << r.samples << " samples\n";
  o.human = h.str();
  return o;
}

std::vector<unsigned long> parse_modulus(const std::string& text) {
  std::vector<unsigned long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--modulus", "expected comma-separated coefficients, got '" + text + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-theory calculator"};
  app.require_subcommand(1, 1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON run report");

  std::map<CLI::App*, std::function<Outcome()>> actions;
  std::string file;

  WindingOptions wopts;
  const auto add_winding_flags = [&](CLI::App* sub) {
    sub->add_option("--modulus-gate", wopts.modulus_gate, "Minimum |f| on the circle")->capture_default_str();
    sub->add_option("--residual-tol", wopts.residual_tolerance, "Quadrature residual tolerance")
        ->capture_default_str();
    sub->add_option("--circle-band", wopts.circle_band, "Reject roots this close to |z| = 1")
        ->capture_default_str();
    sub->add_option("--max-samples", wopts.max_samples, "Quadrature sample cap")->capture_default_str();
  };

  // grothendieck
  auto* groth = app.add_subcommand("grothendieck", "Group completion of a presented monoid");
  groth->add_option("file", file, "Presentation JSON")->required()->check(CLI::ExistingFile);
  actions[groth] = [&] {
    const auto m = parse_as<MonoidPresentation>(load_json_file(file));
    const AbelianGroup g = group_completion(m);
    return Outcome{g, {{"generators", m.generators}, {"relations", m.relations.size()}}, group_line(g)};
  };

  // characteristic classes
  unsigned truncation = kDefaultTruncation;
  unsigned op_k = 2;
  const auto bundle_command = [&](const char* name, const char* help, bool needs_k) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Bundle JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--N", truncation, "Truncation degree")->capture_default_str();
    if (needs_k) sub->add_option("--k", op_k, "Operation index")->required();
    return sub;
  };
  auto* chern = bundle_command("chern", "Total Chern class", false);
  actions[chern] = [&] {
    const auto v = parse_as<VirtualSplitBundle>(load_json_file(file));
    const auto c = total_chern(v, truncation);
    return Outcome{c, {{"rank", v.dimension().get_str()}}, "c(V) =\n" + components_text(c)};
  };
  auto* ch = bundle_command("ch", "Chern character", false);
  actions[ch] = [&] {
    const auto v = parse_as<VirtualSplitBundle>(load_json_file(file));
    const auto c = chern_character(v, truncation);
    return Outcome{c, {{"rank", v.dimension().get_str()}}, "ch(V) =\n" + components_text(c)};
  };
  auto* adams = bundle_command("adams", "Adams operation psi^k", true);
  actions[adams] = [&] {
    const auto v = parse_as<VirtualSplitBundle>(load_json_file(file));
    const auto w = adams_op(v, op_k);
    const auto c = chern_character(w, truncation);
    const auto via = adams_via_newton(chern_data(v, truncation), op_k, truncation);
    const std::string k = std::to_string(op_k);
    return Outcome{{{"bundle", w}, {"ch", c}},
                   {{"newton_agrees", via.poly == c.poly}},
                   "psi^" + k + "(V) = " + w.to_string() + "\nch(psi^" + k + " V) =\n" + components_text(c)};
  };
  auto* lambda = bundle_command("lambda", "Exterior power lambda^k", true);
  actions[lambda] = [&] {
    const auto v = parse_as<VirtualSplitBundle>(load_json_file(file));
    const auto w = lambda_op(v, op_k);
    const auto c = chern_character(w, truncation);
    const std::string k = std::to_string(op_k);
    return Outcome{{{"bundle", w}, {"ch", c}},
                   json::object(),
                   "lambda^" + k + "(V) = " + w.to_string() + "\nch(lambda^" + k + " V) =\n" + components_text(c)};
  };

  // toeplitz
  auto* winding = app.add_subcommand("winding", "Winding number of a Laurent symbol");
  winding->add_option("file", file, "Symbol JSON")->required()->check(CLI::ExistingFile);
  add_winding_flags(winding);
  actions[winding] = [&] { return winding_outcome(parse_as<LaurentSymbol>(load_json_file(file)), wopts, false); };

  auto* tindex = app.add_subcommand("toeplitz-index", "Fredholm index of T_f");
  tindex->add_option("file", file, "Symbol or matrix-symbol JSON")->required()->check(CLI::ExistingFile);
  add_winding_flags(tindex);
  actions[tindex] = [&] {
    const auto j = load_json_file(file);
    if (j.contains("matrix")) {
      const auto r = matrix_symbol_index(parse_as<MatrixSymbol>(j), wopts);
      return Outcome{r, {{"residual", r.residual}, {"samples", r.samples}},
                     "index " + std::to_string(r.index) + "\nwinding of det " + std::to_string(r.winding) + "\n"};
    }
    return winding_outcome(parse_as<LaurentSymbol>(j), wopts, true);
  };

  long shift = 0;
  std::string perturbation_file;
  auto* sindex = app.add_subcommand("structured-index", "Exact index of shift^m + F");
  sindex->add_option("--m", shift, "Shift power")->required();
  sindex->add_option("--F", perturbation_file, "Finite-rank perturbation (matrix JSON over Q)")
      ->check(CLI::ExistingFile);
  actions[sindex] = [&] {
    Matrix f(0, 0, Ring::rationals());
    if (!perturbation_file.empty()) f = parse_as<Matrix>(load_json_file(perturbation_file));
    if (!f.is_square()) throw DomainError("dimension_mismatch", "perturbation must be square");
    const auto r = structured_index({shift, f.with_ring(Ring::rationals())});
    std::ostringstream h;
    h << "index " << r.index << "\nkernel " << r.kernel_dim << ", cokernel " << r.cokernel_dim << " (window "
      << r.window << ")\n";
    return Outcome{r, json::object(), h.str()};
  };

  // clutching
  double tol = 0.0;
  auto* cocycle = app.add_subcommand("cocycle", "Check the cocycle condition");
  cocycle->add_option("file", file, "Cocycle JSON")->required()->check(CLI::ExistingFile);
  cocycle->add_option("--tol", tol, "Entrywise tolerance")->required();
  actions[cocycle] = [&] {
    const auto r = validate_cocycle(parse_as<CocycleData>(load_json_file(file)), tol);
    std::ostringstream h;
    h << (r.passed ? "pass" : "FAIL") << "\nworst deviation " << r.worst_deviation;
    if (!r.worst_relation.empty()) {
      h << " at";
      for (const auto& c : r.worst_relation) h << " " << c;
      if (r.worst_parameter) h << " (param " << *r.worst_parameter << ")";
    }
    h << "\n" << r.triples_checked << " triples, " << r.points_checked << " points\n";
    Outcome o{r, json::object(), h.str()};
    if (!r.passed) {
      o.ok = false;
      o.error_code = "cocycle_violated";
    }
    return o;
  };

  auto* clutch = app.add_subcommand("clutch", "Classify a bundle over S^2 by its clutching function");
  clutch->add_option("file", file, "Symbol or matrix-symbol JSON")->required()->check(CLI::ExistingFile);
  add_winding_flags(clutch);
  actions[clutch] = [&] {
    const MatrixSymbol f = any_symbol_from_json(load_json_file(file));
    const auto idx = matrix_symbol_index(f, wopts);
    const ClutchingClass c{f.size(), idx.winding};
    return Outcome{c, {{"residual", idx.residual}},
                   "rank " + std::to_string(c.rank) + ", degree " + std::to_string(c.degree) + "\n"};
  };

  // ktables
  auto* ktable = app.add_subcommand("ktable", "Closed-form K-groups");
  ktable->require_subcommand(1, 1);
  int sphere_i = 0;
  unsigned long sphere_m = 0, fq_n = 0, stable_i = 0, zrank_n = 0;
  long degree_n = 0;
  std::string fq_q, family;
  auto* sphere = ktable->add_subcommand("sphere", "Reduced K^-i(S^m)");
  sphere->add_option("--i", sphere_i, "Degree, 0 or 1")->required();
  sphere->add_option("--m", sphere_m, "Sphere dimension")->required();
  actions[sphere] = [&] {
    const auto g = k_sphere(sphere_i, sphere_m);
    return Outcome{g, json::object(), group_line(g)};
  };
  auto* fq = ktable->add_subcommand("fq", "K_n of a finite field");
  fq->add_option("--n", fq_n, "Degree")->required();
  fq->add_option("--q", fq_q, "Field size (prime power)")->required();
  actions[fq] = [&] {
    Integer q;
    if (q.set_str(fq_q, 10) != 0) throw CLI::ValidationError("--q", "not an integer: " + fq_q);
    const auto g = k_finite_field(fq_n, q);
    return Outcome{g, json::object(), group_line(g)};
  };
  auto* stable = ktable->add_subcommand("stable", "Stable homotopy of U or SO");
  stable->add_option("--group", family, "U or SO")->required();
  stable->add_option("--i", stable_i, "Homotopy degree")->required();
  actions[stable] = [&] {
    const auto g = stable_homotopy(parse_stable_family(family), stable_i);
    if (!g) {
      return Outcome{nullptr, {{"note", "i = 0 mod 8 is not tabulated"}}, "not tabulated for i = 0 mod 8\n"};
    }
    return Outcome{*g, json::object(), group_line(*g)};
  };
  auto* zrank = ktable->add_subcommand("zrank", "Rank of K_n(Z) tensor Q");
  zrank->add_option("--n", zrank_n, "Degree")->required();
  actions[zrank] = [&] {
    const unsigned r = k_integers_rank(zrank_n);
    return Outcome{{{"rank", r}}, json::object(), std::to_string(r) + "\n"};
  };
  auto* degree = ktable->add_subcommand("degree", "Bott reduction of a degree");
  degree->add_option("--n", degree_n, "Degree")->required();
  actions[degree] = [&] {
    const int d = reduce_degree(degree_n);
    return Outcome{{{"degree", d}}, json::object(), "K^" + std::to_string(degree_n) + " = K^" + std::to_string(d) + "\n"};
  };

  unsigned long bound = 0;
  std::size_t table_size = 16;
  auto* hopf = app.add_subcommand("hopf", "Search n with 2^n | 3^n - 1");
  hopf->add_option("--bound", bound, "Largest n to test")->required();
  hopf->add_option("--table", table_size, "Rows of the v_2 table to report")->capture_default_str();
  actions[hopf] = [&] {
    const auto r = hopf_search(bound, table_size);
    std::ostringstream h;
    h << "solutions:";
    for (auto n : r.solutions) h << " " << n;
    h << "\nv_2 closed form " << (r.closed_form_agrees ? "agrees" : "FAILS") << " for n <= " << bound << "\n";
    for (unsigned long n : {3ul, 5ul, 6ul}) {
      if (n <= bound) h << "odd a admissible at n = " << n << ": " << (hopf_odd_a_admissible(n) ? "yes" : "no") << "\n";
    }
    return Outcome{r, {{"closed_form_agrees", r.closed_form_agrees}}, h.str()};
  };

  // whitehead
  std::string ring_tag;
  auto* factorize = app.add_subcommand("factorize", "Write A as transvections times diag(det A, 1, ...)");
  factorize->add_option("file", file, "Matrix JSON")->required()->check(CLI::ExistingFile);
  factorize->add_option("--ring", ring_tag, "Override the ring: Q or Fp:<p>");
  actions[factorize] = [&] {
    Matrix a = parse_as<Matrix>(load_json_file(file));
    if (!ring_tag.empty()) a = a.with_ring(Ring::parse(ring_tag));
    const auto f = transvection_factorize(a);
    const Ring ring = f.diagonal.ring();
    std::ostringstream h;
    for (const auto& t : f.factors) h << "e^" << t.a.get_str() << "_" << t.i + 1 << t.j + 1 << " ";
    h << "\nD = diag(" << f.diagonal(0, 0).get_str() << ", 1, ...)\n";
    return Outcome{f, {{"reassembles", f.product(ring) == a.with_ring(ring)}, {"factors", f.factors.size()}},
                   h.str()};
  };

  std::size_t st_n = 4, st_trials = 500;
  std::string st_ring = "Z";
  std::optional<std::uint64_t> seed;
  auto* steinberg = app.add_subcommand("steinberg", "Check the Steinberg relations on random transvections");
  steinberg->add_option("--n", st_n, "Matrix size")->capture_default_str();
  steinberg->add_option("--trials", st_trials, "Random (a, b) draws")->capture_default_str();
  steinberg->add_option("--ring", st_ring, "Z or Fp:<p>")->capture_default_str();
  steinberg->add_option("--seed", seed, "Random seed (default 0 or KCALC_SEED)");
  actions[steinberg] = [&] {
    const auto r = steinberg_check(st_n, st_trials, Ring::parse(st_ring), seed.value_or(default_seed()));
    std::ostringstream h;
    h << r.commutators_checked << " commutators, " << r.additivity_checked << " additivity checks, "
      << r.violations.size() << " violations\n";
    Outcome o{r, json::object(), h.str()};
    if (!r.violations.empty()) {
      o.ok = false;
      o.error_code = "steinberg_violated";
    }
    return o;
  };

  std::string k1_q, modulus_text;
  auto* k1 = app.add_subcommand("k1", "K_1(F_q) with a primitive generator");
  k1->add_option("--q", k1_q, "Field size")->required();
  k1->add_option("--modulus", modulus_text, "Irreducible modulus for q = p^e, e > 1 (coefficients, constant first)");
  actions[k1] = [&] {
    Integer q;
    if (q.set_str(k1_q, 10) != 0) throw CLI::ValidationError("--q", "not an integer: " + k1_q);
    std::optional<std::vector<unsigned long>> modulus;
    if (!modulus_text.empty()) modulus = parse_modulus(modulus_text);
    const auto r = k1_finite_field(q, modulus);
    std::ostringstream h;
    h << r.group.to_string() << "\ngenerator";
    for (auto c : r.generator) h << " " << c;
    h << "\n";
    return Outcome{r, json::object(), h.str()};
  };

  std::string suite = "all";
  auto* selftest = app.add_subcommand("selftest", "Run property batteries");
  selftest->add_option("suite", suite, "Suite name or 'all'")->capture_default_str();
  selftest->add_option("--seed", seed, "Random seed (default 0 or KCALC_SEED)");
  actions[selftest] = [&] {
    const auto reports = run_selftest(suite, seed.value_or(default_seed()));
    Outcome o;
    o.result = json::array();
    std::ostringstream h;
    for (const auto& s : reports) {
      json checks = json::array();
      for (const auto& c : s.checks) {
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"cases", c.cases},
                          {"failures", c.failures},
                          {"elapsed_ms", c.elapsed_ms}});
        h << (c.passed ? "ok   " : "FAIL ") << s.suite << ": " << c.name << " (" << c.cases << " cases, "
          << static_cast<long>(c.elapsed_ms) << " ms)\n";
        for (const auto& f : c.failures) h << "       " << f << "\n";
      }
      o.result.push_back({{"suite", s.suite}, {"passed", s.passed}, {"checks", checks}, {"elapsed_ms", s.elapsed_ms}});
      if (!s.passed) {
        o.ok = false;
        o.error_code = "selftest_failed";
      }
    }
    o.diagnostics = {{"seed", seed.value_or(default_seed())}};
    o.human = h.str();
    return o;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  std::string command = chosen->get_name();
  if (chosen == ktable) {
    chosen = ktable->get_subcommands().front();
    command += " " + chosen->get_name();
  }

  const auto start = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  const auto fail = [&](const std::string& code, const std::string& message, int exit_code) {
    if (as_json) {
      std::cout << json{{"status", "error"},    {"command", command},    {"code", code},
                        {"message", message}, {"elapsed_ms", elapsed()}}.dump(2)
                << "\n";
    } else {
      std::cerr << "kcalc " << command << ": " << code << ": " << message << "\n";
    }
    return exit_code;
  };

  try {
    Outcome o = actions.at(chosen)();
    if (as_json) {
      json report = {{"status", o.ok ? "ok" : "error"},
                     {"command", command},
                     {"result", o.result},
                     {"diagnostics", o.diagnostics},
                     {"elapsed_ms", elapsed()}};
      if (!o.ok) report["code"] = o.error_code;
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << o.human;
    }
    return o.ok ? 0 : 1;
  } catch (const CLI::ValidationError& e) {
    return fail("usage", e.what(), 2);
  } catch (const DomainError& e) {
    return fail(e.code(), e.what(), is_usage_code(e.code()) ? 2 : 1);
  }
}
