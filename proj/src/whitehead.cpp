#include "kcalc/whitehead.hpp"

#include <algorithm>

#include "kcalc/error.hpp"
#include "kcalc/ktables.hpp"
#include "kcalc/linalg.hpp"
#include "kcalc/random.hpp"

namespace kcalc {

Matrix Transvection::matrix(std::size_t n, const Ring& ring) const {
  Matrix m = Matrix::identity(n, ring);
  m.set(i, j, a);
  return m;
}

void apply_left(const Transvection& t, Matrix& m) {
  if (t.a == 0) return;
  const Ring& ring = m.ring();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m(t.j, c) == 0) continue;
    m.set(t.i, c, ring.add(m(t.i, c), ring.mul(t.a, m(t.j, c))));
  }
}

Matrix FactorizationResult::product(const Ring& ring) const {
  Matrix m = diagonal.with_ring(ring);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) apply_left(*it, m);
  return m;
}

FactorizationResult transvection_factorize(const Matrix& input) {
  if (!input.is_square()) throw DomainError("dimension_mismatch", "factorization needs a square matrix");
  Matrix a = input.ring().is_field() ? input : input.with_ring(Ring::rationals());
  const Ring ring = a.ring();
  const std::size_t n = a.rows();

  // Row operations applied to a, in order; the factors are their inverses.
  std::vector<Transvection> ops;
  const auto apply = [&](std::size_t i, std::size_t j, const Rational& c) {
    Transvection t{i, j, ring.reduce(c)};
    if (t.a == 0) return;
    apply_left(t, a);
    ops.push_back(t);
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k + 1;
    while (r < n && a(r, k) == 0) ++r;
    if (a(k, k) == 0 && r == n) throw DomainError("singular_matrix", "matrix is singular");
    if (k + 1 < n && a(k, k) != 1) {
      if (r == n) {
        apply(k + 1, k, 1);
        r = k + 1;
      }
      // Make the pivot exactly 1 with a single row addition.
      apply(k, r, ring.div(ring.sub(1, a(k, k)), a(r, k)));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      apply(i, k, ring.neg(ring.div(a(i, k), a(k, k))));
    }
  }

  FactorizationResult out;
  for (const auto& t : ops) out.factors.push_back(t.inverse(ring));
  const Rational d = n == 0 ? Rational(1) : a(n - 1, n - 1);
  if (n >= 2 && d != 1) {
    // diag(1, ..., 1, d) = diag(u, 1, ..., u^-1) diag(d, 1, ..., 1) with u = d^-1,
    // and diag(u, u^-1) = e^u_12 e^{-1/u}_21 e^u_12 e^-1_12 e^1_21 e^-1_12.
    const std::size_t last = n - 1;
    const Rational u = ring.inv(d);
    const Rational u_inv = d;
    out.factors.push_back({0, last, u});
    out.factors.push_back({last, 0, ring.neg(u_inv)});
    out.factors.push_back({0, last, u});
    out.factors.push_back({0, last, ring.neg(1)});
    out.factors.push_back({last, 0, 1});
    out.factors.push_back({0, last, ring.neg(1)});
  }
  out.diagonal = Matrix::identity(n, ring);
  if (n > 0) out.diagonal.set(0, 0, d);
  return out;
}

WhiteheadIdentity whitehead_identity(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows() || !(a.ring() == b.ring())) {
    throw DomainError("dimension_mismatch", "whitehead_identity needs square blocks of one size and ring");
  }
  if (!a.ring().is_field()) throw DomainError("invalid_ring", "whitehead_identity works over a field");
  Matrix a_inv, b_inv;
  try {
    a_inv = inverse(a);
    b_inv = inverse(b);
  } catch (const DomainError& e) {
    if (e.code() == "singular_matrix") throw DomainError("singular_input", "input block is singular");
    throw;
  }
  const Matrix one = Matrix::identity(a.rows(), a.ring());
  WhiteheadIdentity w;
  w.factors = {block_diagonal({a, a_inv, one}), block_diagonal({b, one, b_inv}),
               block_diagonal({a_inv, a, one}), block_diagonal({b_inv, one, b})};
  w.product = w.factors[0] * w.factors[1] * w.factors[2] * w.factors[3];
  w.expected = block_diagonal({a * b * a_inv * b_inv, one, one});
  w.holds = w.product == w.expected;
  return w;
}

SteinbergReport steinberg_check(std::size_t n, std::size_t trials, const Ring& ring, std::uint64_t seed) {
  if (n < 3) throw DomainError("invalid_argument", "Steinberg relations are checked for n >= 3");
  if (ring.kind() == Ring::Kind::Q) throw DomainError("invalid_ring", "steinberg_check runs over Z or F_p");
  Rng rng(seed);
  const auto draw = [&]() -> Rational {
    if (ring.kind() == Ring::Kind::Z) return rng.uniform_int(-10, 10);
    return rng.uniform_int(0, static_cast<long>(ring.characteristic()) - 1);
  };

  SteinbergReport report{n, trials, 0, 0, {}};
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Rational a = draw(), b = draw();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const Transvection x{i, j, a};
        Matrix sum = Transvection{i, j, b}.matrix(n, ring);
        apply_left(x, sum);
        ++report.additivity_checked;
        if (!(sum == Transvection{i, j, ring.add(a, b)}.matrix(n, ring))) {
          report.violations.push_back({"additivity", i, j, i, j, a, b});
        }
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            if (k == l || (j == k && i == l)) continue;
            const Transvection y{k, l, b};
            // [x, y] = x y x^-1 y^-1
            Matrix c = y.inverse(ring).matrix(n, ring);
            apply_left(x.inverse(ring), c);
            apply_left(y, c);
            apply_left(x, c);
            Matrix expected = Matrix::identity(n, ring);
            std::string relation = "commute";
            if (j == k) {
              expected = Transvection{i, l, ring.mul(a, b)}.matrix(n, ring);
              relation = "[e_ij, e_jl] = e_il";
            } else if (i == l) {
              expected = Transvection{k, j, ring.neg(ring.mul(b, a))}.matrix(n, ring);
              relation = "[e_ij, e_ki] = e_kj^{-ba}";
            }
            ++report.commutators_checked;
            if (!(c == expected)) report.violations.push_back({relation, i, j, k, l, a, b});
          }
        }
      }
    }
  }
  return report;
}

namespace {

using u64 = unsigned long;
using Poly64 = std::vector<u64>;  // constant term first, no trailing zeros

u64 mulmod(u64 x, u64 y, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(x) * y) % p);
}

u64 powmod(u64 x, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, x, p);
    x = mulmod(x, x, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 x, u64 p) { return powmod(x, p - 2, p); }

void trim(Poly64& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly64 poly_mod(Poly64 a, const Poly64& m, u64 p) {
  trim(a);
  const u64 lead_inv = invmod(m.back(), p);
  while (a.size() >= m.size()) {
    const u64 c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly64 poly_mulmod(const Poly64& a, const Poly64& b, const Poly64& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly64 r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return poly_mod(std::move(r), m, p);
}

Poly64 poly_powmod(Poly64 base, const Integer& e, const Poly64& m, u64 p) {
  Poly64 r = poly_mod({1}, m, p);
  base = poly_mod(std::move(base), m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = poly_mulmod(r, r, m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = poly_mulmod(r, base, m, p);
  }
  return r;
}

Poly64 poly_sub(Poly64 a, const Poly64& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly64 poly_gcd(Poly64 a, Poly64 b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly64 r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> out;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin: f of degree e is irreducible iff x^{p^e} = x mod f and
// gcd(x^{p^{e/r}} - x, f) = 1 for every prime r | e.
bool is_irreducible(const Poly64& f, u64 p) {
  const std::size_t e = f.size() - 1;
  const Poly64 x = poly_mod({0, 1}, f, p);
  const auto frobenius_power = [&](std::size_t k) {
    Poly64 y = x;
    for (std::size_t i = 0; i < k; ++i) y = poly_powmod(y, Integer(p), f, p);
    return y;
  };
  if (poly_sub(frobenius_power(e), x, p) != Poly64{}) return false;
  for (const auto& r : prime_factors(Integer(static_cast<unsigned long>(e)))) {
    Poly64 g = poly_gcd(f, poly_sub(frobenius_power(e / r.get_ui()), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

K1Result k1_finite_field(const Integer& q, const std::optional<std::vector<unsigned long>>& modulus) {
  auto pp = as_prime_power(q);
  if (!pp) throw DomainError("not_prime_power", q.get_str() + " is not a prime power");
  if (!pp->prime.fits_ulong_p()) throw DomainError("invalid_argument", "characteristic too large");
  const u64 p = pp->prime.get_ui();
  const Integer order = q - 1;
  const auto factors = prime_factors(order);
  K1Result out{AbelianGroup::cyclic(order), {}};

  if (pp->exponent == 1) {
    for (u64 g = 1; g < p || p == 2; ++g) {
      Integer gg = g;
      bool primitive = true;
      for (const auto& r : factors) {
        Integer e = order / r, v;
        mpz_powm(v.get_mpz_t(), gg.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
        if (v == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        out.generator = {g};
        return out;
      }
    }
    throw DomainError("internal", "no primitive root found");
  }

  if (!modulus) {
    throw DomainError("missing_modulus", "F_" + q.get_str() + " needs an irreducible modulus polynomial");
  }
  Poly64 f = *modulus;
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() != pp->exponent + 1 || f.back() != 1) {
    throw DomainError("invalid_modulus", "modulus must be monic of degree " + std::to_string(pp->exponent));
  }
  if (!is_irreducible(f, p)) throw DomainError("invalid_modulus", "modulus is reducible over F_p");

  const std::size_t e = pp->exponent;
  for (Integer code = 1; code < q; ++code) {
    Poly64 g(e, 0);
    Integer rest = code;
    for (std::size_t i = 0; i < e; ++i) {
      g[i] = Integer(rest % p).get_ui();
      rest /= p;
    }
    Poly64 candidate = g;
    trim(candidate);
    bool primitive = true;
    for (const auto& r : factors) {
      if (poly_powmod(candidate, order / r, f, p) == Poly64{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      out.generator = g;
      return out;
    }
  }
  throw DomainError("internal", "no primitive element found");
}

}  // namespace kcalc
