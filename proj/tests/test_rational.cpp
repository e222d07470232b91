#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "antipodal/rational.hpp"

using antipodal::ArithmeticOverflow;
using antipodal::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  const Rational a(6, -8);
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 4);
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_EQ(Rational(0, -5).den(), 1);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(7, 3), Rational(-7, 3));
}

TEST(Rational, OrderingAndFloor) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-4).floor(), -4);
}

TEST(Rational, Printing) {
  EXPECT_EQ(Rational(3, 4).str(), "3/4");
  EXPECT_EQ(Rational(-2).str(), "-2");
}

TEST(Rational, ZeroDenominatorAndDivision) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, OverflowIsReported) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + Rational(1), ArithmeticOverflow);
  EXPECT_THROW(big * Rational(2), ArithmeticOverflow);
  EXPECT_THROW(Rational(std::numeric_limits<std::int64_t>::min() + 1) - Rational(2), ArithmeticOverflow);
  // Large intermediate products that cancel are fine.
  const Rational x(std::numeric_limits<std::int64_t>::max(), 3);
  EXPECT_EQ(x * Rational(3, std::numeric_limits<std::int64_t>::max()), Rational(1));
}

TEST(RationalProperty, FieldAxiomsOnRandomSamples) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
  for (int i = 0; i < 2000; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
    EXPECT_GT(a.den(), 0);
    EXPECT_LE(Rational(a.floor()), a);
    EXPECT_GT(Rational(a.floor() + 1), a);
  }
}
