#pragma once

// Integer polynomials (GMP) and polynomials over prime fields F_q with
// q < 2^32, including squarefree testing and factorization into irreducible
// factors (distinct-degree, then Cantor-Zassenhaus equal-degree splitting).

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wrp/error.hpp"

namespace wrp {

struct BigPolynomial {
  std::vector<mpz_class> coefficients;  // ascending degree

  BigPolynomial() = default;
  explicit BigPolynomial(std::vector<mpz_class> c) : coefficients(std::move(c)) { trim(); }

  void trim() {
    while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
  }
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  const mpz_class& leading() const { return coefficients.back(); }

  friend BigPolynomial operator*(const BigPolynomial& a, const BigPolynomial& b) {
    if (a.coefficients.empty() || b.coefficients.empty()) return {};
    std::vector<mpz_class> c(a.coefficients.size() + b.coefficients.size() - 1, 0);
    for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
      for (std::size_t j = 0; j < b.coefficients.size(); ++j) c[i + j] += a.coefficients[i] * b.coefficients[j];
    }
    return BigPolynomial(std::move(c));
  }
  friend bool operator==(const BigPolynomial&, const BigPolynomial&) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Polynomial over F_q, residues ascending. The zero polynomial has no
// coefficients (degree -1).
struct ModPolynomial {
  std::uint64_t modulus = 2;
  std::vector<std::uint64_t> coefficients;

  ModPolynomial() = default;
  ModPolynomial(std::uint64_t q, std::vector<std::uint64_t> c) : modulus(q), coefficients(std::move(c)) {
    for (auto& x : coefficients) x %= modulus;
    trim();
  }

  void trim() {
    while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
  }
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  bool is_zero() const { return coefficients.empty(); }
  std::uint64_t leading() const { return coefficients.empty() ? 0 : coefficients.back(); }

  friend bool operator==(const ModPolynomial&, const ModPolynomial&) = default;
};

namespace modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t q) { return (a * b) % q; }
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t q) { return (a + b) % q; }
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t q) { return (a + q - b) % q; }

inline std::uint64_t pow(std::uint64_t b, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  b %= q;
  while (e > 0) {
    if (e & 1U) r = mul(r, b, q);
    b = mul(b, b, q);
    e >>= 1U;
  }
  return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t q) { return pow(a, q - 2, q); }

inline ModPolynomial constant(std::uint64_t q, std::uint64_t c) { return ModPolynomial(q, {c}); }
inline ModPolynomial x(std::uint64_t q) { return ModPolynomial(q, {0, 1}); }

inline ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b) {
  const std::uint64_t q = a.modulus;
  std::vector<std::uint64_t> c(std::max(a.coefficients.size(), b.coefficients.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::uint64_t u = i < a.coefficients.size() ? a.coefficients[i] : 0;
    const std::uint64_t v = i < b.coefficients.size() ? b.coefficients[i] : 0;
    c[i] = add(u, v, q);
  }
  return ModPolynomial(q, std::move(c));
}

inline ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b) {
  const std::uint64_t q = a.modulus;
  std::vector<std::uint64_t> c(std::max(a.coefficients.size(), b.coefficients.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::uint64_t u = i < a.coefficients.size() ? a.coefficients[i] : 0;
    const std::uint64_t v = i < b.coefficients.size() ? b.coefficients[i] : 0;
    c[i] = sub(u, v, q);
  }
  return ModPolynomial(q, std::move(c));
}

inline ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
  const std::uint64_t q = a.modulus;
  if (a.is_zero() || b.is_zero()) return ModPolynomial(q, {});
  std::vector<std::uint64_t> c(a.coefficients.size() + b.coefficients.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
      c[i + j] = add(c[i + j], mul(a.coefficients[i], b.coefficients[j], q), q);
    }
  }
  return ModPolynomial(q, std::move(c));
}

inline ModPolynomial scale(const ModPolynomial& a, std::uint64_t k) {
  std::vector<std::uint64_t> c = a.coefficients;
  for (auto& v : c) v = mul(v, k, a.modulus);
  return ModPolynomial(a.modulus, std::move(c));
}

// (quotient, remainder) of a / b; b must be nonzero.
inline std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial& a, const ModPolynomial& b) {
  const std::uint64_t q = a.modulus;
  if (b.is_zero()) fail(ErrorCode::DomainViolation, "polynomial division by zero");
  std::vector<std::uint64_t> r = a.coefficients;
  const int db = b.degree();
  if (a.degree() < db) return {ModPolynomial(q, {}), a};
  std::vector<std::uint64_t> quo(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const std::uint64_t lead_inv = inv(b.leading(), q);
  for (int i = a.degree(); i >= db; --i) {
    const std::uint64_t c = mul(r[static_cast<std::size_t>(i)], lead_inv, q);
    quo[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = sub(slot, mul(c, b.coefficients[static_cast<std::size_t>(j)], q), q);
    }
  }
  return {ModPolynomial(q, std::move(quo)), ModPolynomial(q, std::move(r))};
}

inline ModPolynomial operator%(const ModPolynomial& a, const ModPolynomial& b) { return divmod(a, b).second; }
inline ModPolynomial operator/(const ModPolynomial& a, const ModPolynomial& b) { return divmod(a, b).first; }

inline ModPolynomial monic(const ModPolynomial& a) {
  if (a.is_zero()) return a;
  return scale(a, inv(a.leading(), a.modulus));
}

inline ModPolynomial gcd(ModPolynomial a, ModPolynomial b) {
  while (!b.is_zero()) {
    ModPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline ModPolynomial derivative(const ModPolynomial& a) {
  std::vector<std::uint64_t> c;
  for (std::size_t i = 1; i < a.coefficients.size(); ++i) c.push_back(mul(a.coefficients[i], i % a.modulus, a.modulus));
  return ModPolynomial(a.modulus, std::move(c));
}

// base^e mod m, e given as an arbitrary-size integer.
inline ModPolynomial powmod(ModPolynomial base, mpz_class e, const ModPolynomial& m) {
  ModPolynomial r = constant(m.modulus, 1) % m;
  base = base % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

}  // namespace modp

inline ModPolynomial reduce_mod(const BigPolynomial& p, std::uint64_t q) {
  if (q >= (std::uint64_t{1} << 32) || !is_prime(q)) {
    fail(ErrorCode::InvalidModulus, "modulus must be a prime below 2^32, got " + std::to_string(q));
  }
  if (p.coefficients.empty()) fail(ErrorCode::LeadingCoefficientVanishes, "zero polynomial");
  std::vector<std::uint64_t> c;
  c.reserve(p.coefficients.size());
  const mpz_class mq = static_cast<unsigned long>(q);
  for (const auto& a : p.coefficients) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mq.get_mpz_t());
    c.push_back(r.get_ui());
  }
  if (c.back() == 0) {
    fail(ErrorCode::LeadingCoefficientVanishes, "leading coefficient vanishes mod " + std::to_string(q));
  }
  return ModPolynomial(q, std::move(c));
}

inline bool is_squarefree(const ModPolynomial& pm) {
  if (pm.degree() <= 0) return true;
  return modp::gcd(pm, modp::derivative(pm)).degree() == 0;
}

// gcd(p mod q, p' mod q) is constant.
inline bool separable_mod(const BigPolynomial& p, std::uint64_t q) { return is_squarefree(reduce_mod(p, q)); }

namespace detail {

// Splits a product of distinct monic irreducibles, all of degree d.
inline void equal_degree_split(const ModPolynomial& g, int d, std::mt19937_64& rng, std::vector<ModPolynomial>& out) {
  using namespace modp;
  const std::uint64_t q = g.modulus;
  if (g.degree() == d) {
    out.push_back(monic(g));
    return;
  }
  std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
  for (;;) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(g.degree()));
    for (auto& v : c) v = pick(rng);
    const ModPolynomial a(q, std::move(c));
    if (a.degree() < 1) continue;
    ModPolynomial b;
    if (q == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      b = a % g;
      ModPolynomial term = b;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % g;
        b = b + term;
      }
    } else {
      // a^((q^d - 1)/2) as (a^(1 + q + ... + q^(d-1)))^((q-1)/2).
      ModPolynomial frob = a % g;
      ModPolynomial norm = frob;
      for (int i = 1; i < d; ++i) {
        frob = powmod(frob, mpz_class(static_cast<unsigned long>(q)), g);
        norm = (norm * frob) % g;
      }
      b = powmod(norm, mpz_class(static_cast<unsigned long>((q - 1) / 2)), g) - constant(q, 1);
    }
    ModPolynomial h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

// Monic irreducible factors of a squarefree polynomial over F_q (the
// leading coefficient is dropped), in order of increasing degree.
inline std::vector<ModPolynomial> factorize(const ModPolynomial& pm, std::uint64_t seed = 0x5eed5eedULL) {
  using namespace modp;
  if (pm.degree() < 1) return {};
  if (!is_squarefree(pm)) fail(ErrorCode::NotSquarefree, "polynomial has a repeated factor");
  const std::uint64_t q = pm.modulus;
  std::mt19937_64 rng(seed);
  std::vector<ModPolynomial> out;
  ModPolynomial f = monic(pm);
  const ModPolynomial X = x(q);
  ModPolynomial h = X % f;  // x^(q^d) mod f
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, mpz_class(static_cast<unsigned long>(q)), f);
    ModPolynomial g = gcd(f, h - X);
    if (g.degree() > 0) {
      detail::equal_degree_split(g, d, rng, out);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back(monic(f));
  std::stable_sort(out.begin(), out.end(), [](const ModPolynomial& a, const ModPolynomial& b) {
    return a.degree() < b.degree() || (a.degree() == b.degree() && a.coefficients < b.coefficients);
  });
  return out;
}

// Degrees of the irreducible factors, ascending.
inline std::vector<int> factor_degrees(const ModPolynomial& pm) {
  std::vector<int> out;
  for (const auto& f : factorize(pm)) out.push_back(f.degree());
  return out;
}

}  // namespace wrp
