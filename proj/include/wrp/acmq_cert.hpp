#pragma once

// Checks that the corner-cutting instance (quadrant with corner O = (50,150),
// alpha = 1.2, s = (0,0), t = (200,200)) leads to a degree-11 polynomial whose
// roots are not expressible by radicals over the rationals: factor degree
// patterns {11}, {1,10}, {2,9} modulo three primes that do not divide the
// discriminant, plus numeric consistency with the transcendental Snell
// equation the polynomial came from.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wrp/error.hpp"
#include "wrp/modpoly.hpp"
#include "wrp/numeric.hpp"

namespace wrp {

inline BigPolynomial snell_polynomial() {
  return BigPolynomial({mpz_class("-5602195930320001"), mpz_class("93511401766200000"),
                        mpz_class("-713160370741499900"), mpz_class("3259398736514250000"),
                        mpz_class("-9869397269940000000"), mpz_class("20717559301050000000"),
                        mpz_class("-30701172521250000000"), mpz_class("32082903984375000000"),
                        mpz_class("-23159988281250000000"), mpz_class("10999072265625000000"),
                        mpz_class("-3093750000000000000"), mpz_class("390625000000000000")});
}

inline constexpr double kCertAlpha = 1.2;

// sqrt(a^2 - u^2) (3/u - 1/sqrt(1 - u^2) + 1/sqrt(1 - a^2 + u^2)) - 3,
// with u the sine of the incidence angle at the vertical side.
inline double transcendental_residual(double u, double alpha) {
  if (!(u > 0.0 && u < std::min(1.0, alpha)) || !(1.0 - alpha * alpha + u * u > 0.0)) {
    fail(ErrorCode::DomainViolation, "u outside the domain of the Snell equation");
  }
  return std::sqrt(alpha * alpha - u * u) *
             (3.0 / u - 1.0 / std::sqrt(1.0 - u * u) + 1.0 / std::sqrt(1.0 - alpha * alpha + u * u)) -
         3.0;
}

// Bracket on which the residual is defined and changes sign once.
inline std::pair<double, double> transcendental_bracket(double alpha) {
  double lo = 0.01;
  if (alpha > 1.0) lo = std::max(lo, std::sqrt(alpha * alpha - 1.0) * (1.0 + 1e-12));
  return {lo, std::min(0.99, alpha * (1.0 - 1e-12))};
}

inline double transcendental_root(double alpha) {
  const auto [lo, hi] = transcendental_bracket(alpha);
  const auto r = numeric::bisect([&](double u) { return transcendental_residual(u, alpha); }, lo, hi);
  if (!r) fail(ErrorCode::RootSolveFailure, "Snell equation has no sign change on the bracket");
  return *r;
}

// |p(u)| / sum |c_i| |u|^i, evaluated exactly in rationals.
inline double scaled_residual(const BigPolynomial& p, double u) {
  const mpq_class x(u);
  mpq_class value = 0;
  mpq_class scale = 0;
  mpq_class power = 1;
  const mpq_class ax = abs(x);
  mpq_class apower = 1;
  for (const auto& c : p.coefficients) {
    value += c * power;
    scale += abs(c) * apower;
    power *= x;
    apower *= ax;
  }
  if (scale == 0) return 0.0;
  const mpq_class ratio = abs(value) / scale;
  return ratio.get_d();
}

// Horizontal extent of the refracted path for incidence sine u:
// 50 + (150 - y)/tan(theta'_1) + 50/tan(bar theta'_2) with y = 50 tan(theta_1).
inline double horizontal_span(double u, double alpha) {
  const double y = 50.0 * u / std::sqrt(1.0 - u * u);
  const double s1 = u / alpha;  // sin theta'_1
  const double tan1 = s1 / std::sqrt(1.0 - s1 * s1);
  const double c2 = std::sqrt(alpha * alpha - u * u);  // cos of the exit angle to the top side
  const double tan2 = std::sqrt(1.0 - c2 * c2) / c2;
  return 50.0 + (150.0 - y) / tan1 + 50.0 / tan2;
}

struct PrimeCheck {
  std::uint64_t prime = 0;
  std::vector<int> expected;
  std::vector<int> degrees;
  bool separable = false;
  bool pattern_ok = false;
  std::optional<std::uint64_t> leading_residue;
  std::string error;
};

struct CertificateReport {
  std::vector<PrimeCheck> primes;
  double snell_root = 0.0;
  double snell_residual = 0.0;
  double polynomial_residual_at_root = 0.0;
  double span = 0.0;
  double span_error = 0.0;
  bool pass = false;
  std::vector<std::string> reasons;
};

struct CertificateOptions {
  BigPolynomial polynomial = snell_polynomial();
  std::vector<std::uint64_t> primes{59, 37, 17};
  double alpha = kCertAlpha;
  double residual_tolerance = 1e-6;
  double span_tolerance = 1e-8;
};

inline CertificateReport verify_certificate(const CertificateOptions& opt = {}) {
  CertificateReport rep;
  const int d = opt.polynomial.degree();
  const std::vector<std::vector<int>> patterns{{d}, {1, d - 1}, {2, d - 2}};
  for (std::size_t k = 0; k < opt.primes.size(); ++k) {
    PrimeCheck pc;
    pc.prime = opt.primes[k];
    pc.expected = k < patterns.size() ? patterns[k] : std::vector<int>{};
    try {
      const ModPolynomial pm = reduce_mod(opt.polynomial, pc.prime);
      pc.leading_residue = pm.leading();
      pc.separable = is_squarefree(pm);
      if (pc.separable) {
        pc.degrees = factor_degrees(pm);
        pc.pattern_ok = pc.degrees == pc.expected;
      }
      if (!pc.separable) rep.reasons.push_back("not separable mod " + std::to_string(pc.prime));
      else if (!pc.pattern_ok) rep.reasons.push_back("factor degree pattern mismatch mod " + std::to_string(pc.prime));
    } catch (const Error& e) {
      pc.error = e.what();
      rep.reasons.push_back(std::string(to_string(e.code())) + " mod " + std::to_string(pc.prime));
    }
    rep.primes.push_back(std::move(pc));
  }
  if (opt.primes.size() != 3) rep.reasons.push_back("three primes are required");

  try {
    rep.snell_root = transcendental_root(opt.alpha);
    rep.snell_residual = transcendental_residual(rep.snell_root, opt.alpha);
    rep.polynomial_residual_at_root = scaled_residual(opt.polynomial, rep.snell_root);
    rep.span = horizontal_span(rep.snell_root, opt.alpha);
    rep.span_error = std::fabs(rep.span - 200.0);
    if (!(rep.polynomial_residual_at_root <= opt.residual_tolerance)) {
      rep.reasons.push_back("polynomial residual at the Snell root exceeds tolerance");
    }
    if (!(rep.span_error <= opt.span_tolerance)) rep.reasons.push_back("horizontal span identity fails");
  } catch (const Error& e) {
    rep.reasons.push_back(std::string("Snell root: ") + e.what());
  }
  rep.pass = rep.reasons.empty();
  return rep;
}

}  // namespace wrp
