#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcalc/exact.hpp"

namespace kcalc {

// Outcome of one property battery.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // first few counterexamples
  double elapsed_ms = 0.0;
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0.0;
};

// Every property battery is deterministic in its seed.
namespace checks {

CheckResult snf_witness(std::size_t cases, std::uint64_t seed);
CheckResult rank_kernel(std::size_t cases, std::uint64_t seed);
CheckResult determinant_multiplicative(std::size_t cases, std::uint64_t seed);

CheckResult grothendieck_examples();
CheckResult element_equal_vs_lattice(std::size_t cases, std::uint64_t seed);

CheckResult newton_vs_power_sums(unsigned max_k, std::size_t variables);
CheckResult symmetrize_round_trip(std::size_t cases, std::uint64_t seed);

CheckResult chern_character_homomorphism(std::size_t cases, unsigned bound, std::uint64_t seed);
CheckResult whitney_sum(std::size_t cases, unsigned bound, std::uint64_t seed);
CheckResult lambda_identities(std::size_t cases, unsigned through, std::uint64_t seed);
CheckResult adams_composition(unsigned max_k, std::size_t bundles, std::uint64_t seed);
CheckResult adams_congruence(const std::vector<unsigned>& primes, std::size_t cases, unsigned bound,
                             std::uint64_t seed);
CheckResult adams_newton_agreement(std::size_t cases, unsigned bound, std::uint64_t seed);
CheckResult sphere_adams(unsigned max_k, unsigned max_n, std::uint64_t seed);

CheckResult toeplitz_examples();
CheckResult winding_agreement(std::size_t cases, int max_pq, std::uint64_t seed);
CheckResult winding_additivity(std::size_t cases, std::uint64_t seed);
CheckResult structured_index_invariance(long max_shift, std::size_t cases_per_shift, std::uint64_t seed);
CheckResult homotopy_invariance(std::size_t cases, std::uint64_t seed);
CheckResult truncation_structure(std::size_t cases, std::uint64_t seed);

CheckResult cocycle_atlases(std::size_t cases, std::uint64_t seed);
CheckResult clutching_invariance(std::size_t cases, std::uint64_t seed);

CheckResult hopf_search_check(unsigned long bound);
CheckResult hopf_odd_refutation();
CheckResult k_tables();

CheckResult factorization_round_trip(std::size_t cases, const Ring& ring, std::uint64_t seed);
CheckResult steinberg_relations(std::size_t n, std::size_t trials, const Ring& ring, std::uint64_t seed);
CheckResult whitehead_block_identity(std::size_t cases, std::uint64_t seed);
CheckResult k1_generators();

}  // namespace checks

// "exact-linalg", "grothendieck", "symfun", "charclass", "toeplitz",
// "clutching", "ktables", "whitehead".
const std::vector<std::string>& selftest_suites();

// Runs one suite, or every suite for "all" (suites run concurrently).
// Throws DomainError("unknown_suite").
std::vector<SuiteReport> run_selftest(const std::string& tag, std::uint64_t seed);

}  // namespace kcalc
