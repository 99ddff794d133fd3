#include "kcalc/ktables.hpp"

#include "kcalc/error.hpp"

namespace kcalc {

int reduce_degree(long n) { return static_cast<int>(((n % 2) + 2) % 2); }

AbelianGroup k_sphere(int i, unsigned long m) {
  if (i != 0 && i != 1) {
    throw DomainError("invalid_degree", "sphere degree must be 0 or 1, got " + std::to_string(i));
  }
  return (static_cast<unsigned long>(i) + m) % 2 == 0 ? AbelianGroup::free(1) : AbelianGroup::trivial();
}

std::optional<PrimePower> as_prime_power(const Integer& q) {
  if (q < 2) return std::nullopt;
  const unsigned long bits = mpz_sizeinbase(q.get_mpz_t(), 2);
  for (unsigned long e = bits; e >= 1; --e) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), e) == 0) continue;
    if (mpz_probab_prime_p(root.get_mpz_t(), 40) != 0) return PrimePower{root, e};
  }
  return std::nullopt;
}

AbelianGroup k_finite_field(unsigned long n, const Integer& q) {
  if (!as_prime_power(q)) {
    throw DomainError("not_prime_power", q.get_str() + " is not a prime power");
  }
  if (n == 0) return AbelianGroup::free(1);
  if (n % 2 == 0) return AbelianGroup::trivial();
  Integer order;
  mpz_pow_ui(order.get_mpz_t(), q.get_mpz_t(), (n + 1) / 2);
  return AbelianGroup::cyclic(order - 1);
}

StableFamily parse_stable_family(const std::string& tag) {
  if (tag == "U") return StableFamily::Unitary;
  if (tag == "SO") return StableFamily::SpecialOrthogonal;
  throw DomainError("unknown_tag", "unknown group tag '" + tag + "' (expected U or SO)");
}

std::optional<AbelianGroup> stable_homotopy(StableFamily family, unsigned long i) {
  if (family == StableFamily::Unitary) {
    return i % 2 == 1 ? AbelianGroup::free(1) : AbelianGroup::trivial();
  }
  switch (i % 8) {
    case 1:
      return AbelianGroup::cyclic(2);
    case 3:
    case 7:
      return AbelianGroup::free(1);
    case 2:
    case 4:
    case 5:
    case 6:
      return AbelianGroup::trivial();
    default:
      return std::nullopt;
  }
}

unsigned k_integers_rank(unsigned long n) {
  if (n == 0) return 1;
  return (n >= 5 && n % 4 == 1) ? 1 : 0;
}

unsigned long v2_closed_form(unsigned long n) {
  if (n == 0) throw DomainError("invalid_argument", "v_2(3^0 - 1) is infinite");
  if (n % 2 == 1) return 1;
  unsigned long v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v + 2;
}

HopfReport hopf_search(unsigned long bound, std::size_t table_size) {
  if (bound == 0) throw DomainError("invalid_argument", "search bound must be >= 1");
  HopfReport report;
  report.bound = bound;
  Integer power = 1;
  Integer shifted;
  for (unsigned long n = 1; n <= bound; ++n) {
    power *= 3;
    shifted = power - 1;
    const unsigned long v2 = mpz_scan1(shifted.get_mpz_t(), 0);
    if (v2 >= n) report.solutions.push_back(n);
    if (report.v2_table.size() < table_size) report.v2_table.emplace_back(n, v2);
    if (report.closed_form_agrees && v2 != v2_closed_form(n)) {
      report.closed_form_agrees = false;
      report.first_mismatch = n;
    }
  }
  return report;
}

namespace {

std::pair<Integer, Integer> hopf_sides(unsigned long n) {
  Integer two, three;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, n);
  mpz_ui_pow_ui(three.get_mpz_t(), 3, n);
  return {two * (two - 1), three * (three - 1)};
}

}  // namespace

bool hopf_constraint(unsigned long n, const Integer& a, const Integer& b) {
  if (n == 0) throw DomainError("invalid_argument", "hopf_constraint needs n >= 1");
  auto [left, right] = hopf_sides(n);
  return left * b == right * a;
}

bool hopf_odd_a_admissible(unsigned long n) {
  if (n == 0) throw DomainError("invalid_argument", "hopf_constraint needs n >= 1");
  // left | right * a for some odd a iff left / gcd(left, right) is odd.
  auto [left, right] = hopf_sides(n);
  Integer g;
  mpz_gcd(g.get_mpz_t(), left.get_mpz_t(), right.get_mpz_t());
  Integer needed = left / g;
  return mpz_odd_p(needed.get_mpz_t()) != 0;
}

}  // namespace kcalc
