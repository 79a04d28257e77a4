#include <gtest/gtest.h>

#include <limits>
#include <random>
#include <stdexcept>

#include "bribery/rational.hpp"

using bribery::Rational;

TEST(Rational, NormalizesSignAndTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_EQ(Rational(0, -5).denominator(), 1);
}

TEST(Rational, RejectsZeroDenominator) { EXPECT_THROW(Rational(1, 0), std::domain_error); }

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_THROW(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST(Rational, OrderingIsExact) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  // Neighbours that would collide in double precision.
  const std::int64_t big = std::int64_t{1} << 60;
  EXPECT_LT(Rational(big - 1, big), Rational(big, big + 1));
}

TEST(Rational, OverflowThrowsInsteadOfRounding) {
  const auto max = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(Rational(max) + Rational(1), std::overflow_error);
  EXPECT_THROW(Rational(1, max) * Rational(1, 3), std::overflow_error);
}

TEST(Rational, StringRoundTrip) {
  EXPECT_EQ(Rational(2).to_string(), "2/1");
  EXPECT_EQ(Rational(-3, 2).to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("7/2"), Rational(7, 2));
  EXPECT_EQ(Rational::parse("-4"), Rational(-4));
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Rational, FieldPropertiesOnRandomValues) {
  std::mt19937_64 rng(11);
  auto pick = [&] {
    const auto num = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const auto den = static_cast<std::int64_t>(rng() % 1000) + 1;
    return Rational(num, den);
  };
  for (int i = 0; i < 500; ++i) {
    const Rational a = pick();
    const Rational b = pick();
    const Rational c = pick();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b - b, a);
    if (b != Rational(0)) EXPECT_EQ(a / b * b, a);
    EXPECT_EQ(Rational::parse(a.to_string()), a);
    EXPECT_EQ(a < b, a.numerator() * b.denominator() < b.numerator() * a.denominator());
  }
}
