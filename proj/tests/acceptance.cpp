// One PASS/FAIL line per acceptance criterion; nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "kcalc/error.hpp"
#include "kcalc/ktables.hpp"
#include "kcalc/selftest.hpp"
#include "kcalc/toeplitz.hpp"

using namespace kcalc;

namespace {

constexpr std::uint64_t kSeed = 0;

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void absorb(const CheckResult& c) {
    if (c.passed) return;
    passed = false;
    notes.push_back(c.name + (c.failures.empty() ? "" : ": " + c.failures.front()));
  }
  void require(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    notes.push_back(what);
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const DomainError& e) {
    out.require(false, "unexpected error " + e.code() + ": " + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "took %.2f s, limit %.0f s", secs, limit_s);
    out.require(secs < limit_s, buf);
  }
  if (!out.passed) ++failures;
  std::printf("%s %d: %s (%.2f s)\n", out.passed ? "PASS" : "FAIL", id, title.c_str(), secs);
  for (const auto& n : out.notes) std::printf("    %s\n", n.c_str());
  std::fflush(stdout);
}

// v_2(3^n - 1) by direct big-integer valuation, 3^n built incrementally.
bool v2_matches_direct(unsigned long limit, unsigned long& mismatch) {
  Integer three_n = 1;
  for (unsigned long n = 1; n <= limit; ++n) {
    three_n *= 3;
    const Integer x = three_n - 1;
    if (mpz_scan1(x.get_mpz_t(), 0) != v2_closed_form(n)) {
      mismatch = n;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "Newton power sums vs brute force, k <= 8 in 8 variables", 10, [](Outcome& o) {
    o.absorb(checks::newton_vs_power_sums(8, 8));
  });

  criterion(2, "Chern character is additive and multiplicative, 200 bundles, N = 6", 10, [](Outcome& o) {
    o.absorb(checks::chern_character_homomorphism(200, 6, kSeed));
  });

  criterion(3, "lambda_t multiplicative and lambda_t S_-t = 1 through t^8, 100 cases", 0, [](Outcome& o) {
    o.absorb(checks::lambda_identities(100, 8, kSeed));
  });

  criterion(4, "Adams composition, mod-p congruence, Newton agreement, spheres", 0, [](Outcome& o) {
    o.absorb(checks::adams_composition(5, 20, kSeed));
    o.absorb(checks::adams_congruence({2, 3, 5}, 30, 6, kSeed));
    o.absorb(checks::adams_newton_agreement(100, 6, kSeed));
    o.absorb(checks::sphere_adams(5, 4, kSeed));
  });

  criterion(5, "winding algorithms agree on 500 symbols, p, q <= 8", 30, [](Outcome& o) {
    o.absorb(checks::winding_agreement(500, 8, kSeed));
  });

  criterion(6, "Toeplitz index theorem and index stability", 0, [](Outcome& o) {
    o.require(toeplitz_index(LaurentSymbol::monomial(1)).index == -1, "Ind T_z != -1");
    o.absorb(checks::structured_index_invariance(5, 100, kSeed));
    o.absorb(checks::winding_additivity(200, kSeed));
  });

  criterion(7, "Hopf invariant one: search to 10^5, v_2 closed form, odd-a refutation", 20, [](Outcome& o) {
    o.absorb(checks::hopf_search_check(100000));
    unsigned long mismatch = 0;
    o.require(v2_matches_direct(10000, mismatch), "v_2 closed form wrong at n = " + std::to_string(mismatch));
    o.absorb(checks::hopf_odd_refutation());
  });

  criterion(8, "K-group tables", 0, [](Outcome& o) { o.absorb(checks::k_tables()); });

  criterion(9, "group completion examples and element_equal vs lattice membership", 0, [](Outcome& o) {
    o.absorb(checks::grothendieck_examples());
    o.absorb(checks::element_equal_vs_lattice(200, kSeed));
  });

  criterion(10, "transvection factorization, Steinberg table, Whitehead identity", 0, [](Outcome& o) {
    o.absorb(checks::factorization_round_trip(200, Ring::rationals(), kSeed));
    o.absorb(checks::factorization_round_trip(200, Ring::prime_field(7), kSeed));
    o.absorb(checks::steinberg_relations(4, 500, Ring::integers(), kSeed));
    o.absorb(checks::whitehead_block_identity(100, kSeed));
  });

  criterion(11, "Smith normal form witness on 500 matrices, full selftest < 60 s", 0, [](Outcome& o) {
    o.absorb(checks::snf_witness(500, kSeed));
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = run_selftest("all", kSeed);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& r : reports)
      for (const auto& c : r.checks) o.absorb(c);
    o.require(secs < 60.0, "selftest all took " + std::to_string(secs) + " s");
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
