#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "racah/rational.hpp"
#include "gen.hpp"

using racah::Rational;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -2).str(), "-1/2");
  EXPECT_EQ(Rational(1, -2).den(), 2);
  EXPECT_EQ(Rational(-6, -3).str(), "2");
  EXPECT_TRUE(Rational(0, 5).is_zero());
  EXPECT_EQ(Rational(0, -5).str(), "0");
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse(" -7 "), Rational(-7));
  EXPECT_EQ(Rational::parse("+4/1"), Rational(4));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/10").str(), "12345678901234567890123456789");
  EXPECT_THROW(Rational::parse("0.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1e3"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, ZeroDivision) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(3) / Rational(0), std::domain_error);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(7, 3).sign(), 1);
  EXPECT_EQ(Rational(-7, 3).sign(), -1);
}

TEST(Rational, FieldLaws) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 500; ++it) {
    Rational a = racah::testgen::small_rational(rng), b = racah::testgen::small_rational(rng),
             c = racah::testgen::small_rational(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    EXPECT_EQ(Rational::parse(a.str()), a);
    if (a == b) EXPECT_EQ(a.hash(), b.hash());
  }
}
