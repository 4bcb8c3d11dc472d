#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

#include "wrp/acmq_cert.hpp"
#include "wrp/modpoly.hpp"

using namespace wrp;

namespace {

ModPolynomial mp(std::uint64_t q, std::vector<std::uint64_t> c) { return ModPolynomial(q, std::move(c)); }

ModPolynomial product(const std::vector<ModPolynomial>& fs) {
  ModPolynomial out = modp::constant(fs.front().modulus, 1);
  for (const auto& f : fs) out = modp::operator*(out, f);
  return out;
}

}  // namespace

TEST(BigPoly, SnellPolynomial) {
  const BigPolynomial p = snell_polynomial();
  EXPECT_EQ(p.degree(), 11);
  EXPECT_EQ(p.leading(), mpz_class("390625000000000000"));
  EXPECT_EQ(p.coefficients[0], mpz_class("-5602195930320001"));
}

TEST(ModArithmetic, ReduceAndLeadingResidues) {
  const BigPolynomial p = snell_polynomial();
  EXPECT_EQ(reduce_mod(p, 59).leading(), 46u);
  EXPECT_EQ(reduce_mod(p, 37).leading(), 16u);
  EXPECT_EQ(reduce_mod(p, 17).leading(), 4u);
  // Negative coefficients reduce to the non-negative residue.
  EXPECT_EQ(reduce_mod(BigPolynomial({mpz_class(-1), mpz_class(1)}), 7).coefficients,
            (std::vector<std::uint64_t>{6, 1}));
}

TEST(ModArithmetic, ReduceErrors) {
  const BigPolynomial p = snell_polynomial();
  EXPECT_THROW(reduce_mod(p, 5), Error);  // 5 divides the leading coefficient
  try {
    reduce_mod(p, 5);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LeadingCoefficientVanishes);
  }
  try {
    reduce_mod(p, 15);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidModulus);
  }
}

TEST(ModArithmetic, DivisionAndGcd) {
  const ModPolynomial a = mp(7, {1, 0, 1});  // u^2 + 1, irreducible mod 7
  const ModPolynomial b = mp(7, {3, 1});     // u + 3
  const auto [q, r] = modp::divmod(modp::operator*(a, b), b);
  EXPECT_EQ(q, a);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(modp::gcd(a, b), modp::constant(7, 1));
  EXPECT_EQ(modp::gcd(modp::operator*(a, b), modp::operator*(b, b)), b);
}

TEST(Separable, Examples) {
  const BigPolynomial p = snell_polynomial();
  EXPECT_TRUE(separable_mod(p, 59));
  EXPECT_TRUE(separable_mod(p, 37));
  EXPECT_TRUE(separable_mod(p, 17));
  EXPECT_FALSE(separable_mod(BigPolynomial({0, 0, 1}), 3));
  // 13 divides the discriminant.
  EXPECT_FALSE(separable_mod(p, 13));
}

TEST(Factor, DegreePatterns) {
  const BigPolynomial p = snell_polynomial();
  EXPECT_EQ(factor_degrees(reduce_mod(p, 59)), std::vector<int>{11});
  EXPECT_EQ(factor_degrees(reduce_mod(p, 37)), (std::vector<int>{1, 10}));
  EXPECT_EQ(factor_degrees(reduce_mod(p, 17)), (std::vector<int>{2, 9}));
}

// Patterns for further primes, cross-checked with a computer algebra system.
TEST(Factor, OtherPrimes) {
  const BigPolynomial p = snell_polynomial();
  EXPECT_EQ(factor_degrees(reduce_mod(p, 3)), std::vector<int>{11});
  EXPECT_EQ(factor_degrees(reduce_mod(p, 7)), (std::vector<int>{1, 2, 2, 6}));
  EXPECT_EQ(factor_degrees(reduce_mod(p, 11)), (std::vector<int>{1, 1, 4, 5}));
}

TEST(Factor, ModSeventeenFactors) {
  const auto fs = factorize(reduce_mod(snell_polynomial(), 17));
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0], mp(17, {9, 14, 1}));
  EXPECT_EQ(fs[1], mp(17, {16, 9, 12, 2, 2, 5, 3, 11, 8, 1}));
}

TEST(Factor, ProductReconstructsInput) {
  for (std::uint64_t q : {2u, 3u, 5u, 31u, 101u}) {
    // (u + 1)(u^4 + u^3 + 1)(u^5 + 3u - 1)
    const ModPolynomial f = product({mp(q, {1, 1}), mp(q, {1, 0, 0, 1, 1}), mp(q, {q - 1, 3, 0, 0, 0, 1})});
    if (!is_squarefree(f)) continue;
    const auto fs = factorize(f);
    int total = 0;
    for (const auto& g : fs) {
      EXPECT_EQ(g.leading(), 1u);
      total += g.degree();
    }
    EXPECT_EQ(total, f.degree());
    EXPECT_EQ(product(fs), modp::monic(f)) << "q = " << q;
  }
}

TEST(Factor, Deterministic) {
  const ModPolynomial f = reduce_mod(snell_polynomial(), 17);
  EXPECT_EQ(factorize(f), factorize(f));
}

TEST(Factor, RejectsRepeatedFactors) {
  try {
    factorize(mp(5, {1, 2, 1}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSquarefree);
  }
}

TEST(Transcendental, SignsAndDomain) {
  EXPECT_GT(transcendental_residual(0.67, 1.2), 0.0);
  EXPECT_LT(transcendental_residual(0.99, 1.2), 0.0);
  EXPECT_THROW(transcendental_residual(0.5, 1.2), Error);  // 1 - alpha^2 + u^2 < 0
  EXPECT_THROW(transcendental_residual(1.0, 1.2), Error);
  const double u = transcendental_root(1.2);
  EXPECT_NEAR(u, 0.84852813742385702, 1e-13);
  EXPECT_NEAR(transcendental_residual(u, 1.2), 0.0, 1e-12);
  EXPECT_NEAR(horizontal_span(u, 1.2), 200.0, 1e-9);
}

TEST(Certificate, DefaultRunPasses) {
  const auto start = std::chrono::steady_clock::now();
  const CertificateReport r = verify_certificate();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.reasons.empty());
  ASSERT_EQ(r.primes.size(), 3u);
  EXPECT_EQ(r.primes[0].degrees, std::vector<int>{11});
  EXPECT_EQ(r.primes[1].degrees, (std::vector<int>{1, 10}));
  EXPECT_EQ(r.primes[2].degrees, (std::vector<int>{2, 9}));
  for (const auto& pc : r.primes) EXPECT_TRUE(pc.separable);
  EXPECT_LE(r.polynomial_residual_at_root, 1e-6);
  EXPECT_LE(r.span_error, 1e-8);
  EXPECT_LT(secs, 5.0);
}

TEST(Certificate, PrimeFiveFails) {
  CertificateOptions opt;
  opt.primes[0] = 5;
  const CertificateReport r = verify_certificate(opt);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.primes[0].pattern_ok);
}

TEST(Certificate, TamperedPolynomialFails) {
  CertificateOptions opt;
  opt.polynomial.coefficients[0] = 0;
  const CertificateReport r = verify_certificate(opt);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.polynomial_residual_at_root, 1e-6);
}
