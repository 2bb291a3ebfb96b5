#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "shadowcover/rational.hpp"

using shadowcover::Rational;

TEST(Rational, LowestTermsAndPositiveDenominator) {
  const Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, -5).str(), "0");
  EXPECT_EQ(Rational(10, 5), Rational(2));
}

TEST(Rational, ParseAcceptsExactForms) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-3/9"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("+4/2"), Rational(2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/3").str(), "41152263004115226300411522630");
}

TEST(Rational, ParseRejectsMalformed) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "0.5", "1e3", " 1", "1/2/3", "a"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, SpillsToBigAndBack) {
  const Rational big = Rational(std::numeric_limits<long long>::max()) * Rational(4);
  EXPECT_EQ(big.str(), "36893488147419103228");
  const Rational back = big / Rational(4);
  EXPECT_EQ(back, Rational(std::numeric_limits<long long>::max()));
  EXPECT_EQ(big - big, Rational(0));
  EXPECT_LT(Rational(std::numeric_limits<long long>::max()), big);
  EXPECT_EQ(Rational(std::numeric_limits<long long>::min()).str(), "-9223372036854775808");
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(0).reciprocal(), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

// Every operation agrees with plain GMP rationals, including operands near
// the 64-bit boundary.
TEST(Rational, ArithmeticMatchesGmpOracle) {
  std::mt19937_64 rng(7);
  auto draw = [&]() -> long long {
    switch (rng() % 3) {
      case 0: return static_cast<long long>(rng() % 41) - 20;
      case 1: return static_cast<long long>(rng() >> 33) - (1LL << 30);
      default: return static_cast<long long>(rng() >> 1) * ((rng() & 1) ? 1 : -1);
    }
  };
  for (int i = 0; i < 5000; ++i) {
    long long an = draw(), ad = draw(), bn = draw(), bd = draw();
    if (ad == 0) ad = 1;
    if (bd == 0) bd = 1;
    const Rational a(an, ad), b(bn, bd);
    mpq_class qa(mpz_class(static_cast<long>(an)), mpz_class(static_cast<long>(ad)));
    mpq_class qb(mpz_class(static_cast<long>(bn)), mpz_class(static_cast<long>(bd)));
    qa.canonicalize();
    qb.canonicalize();
    EXPECT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
    EXPECT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
    EXPECT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
    if (bn != 0) EXPECT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
    EXPECT_EQ(a < b, qa < qb);
    EXPECT_EQ(a == b, qa == qb);
    EXPECT_EQ(Rational::parse((a * b).str()), a * b);
  }
}
