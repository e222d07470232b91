#include <gtest/gtest.h>

#include <random>

#include "antipodal/formula.hpp"

using namespace antipodal;

TEST(Formula, EvaluatesTableStrings) {
  EXPECT_EQ(Formula("rq").eval_int(5, 3), 15);
  EXPECT_EQ(Formula("2qr").eval_int(4, 2), 16);
  EXPECT_EQ(Formula("r(r+1)/2").eval_int(7), 28);
  EXPECT_EQ(Formula("2r^2+4r-3").eval_int(3), 27);
  EXPECT_EQ(Formula("(r^2+2r-3)/2").eval_int(5), 16);
  EXPECT_EQ(Formula("r^2/2").eval_int(8), 32);
  EXPECT_EQ(Formula("64").eval_int(0), 64);
}

TEST(Formula, RejectsMalformedAndNonIntegral) {
  EXPECT_THROW(Formula("2r+"), ParseError);
  EXPECT_THROW(Formula("(r"), ParseError);
  EXPECT_THROW(Formula("x"), ParseError);
  EXPECT_THROW((void)Formula("r/2").eval_int(3), ParseError);
  EXPECT_EQ(Formula("r/2").eval(3), Rational(3, 2));
}

TEST(Formula, AffineFitAndRendering) {
  auto fit = [](std::vector<std::pair<Rational::int_type, Rational>> s) { return render_affine(*fit_affine(s)); };
  EXPECT_EQ(fit({{3, Rational(1)}, {7, Rational(2)}, {11, Rational(3)}}), "(r+1)/4");
  EXPECT_EQ(fit({{5, Rational(4)}, {6, Rational(5)}}), "r-1");
  EXPECT_EQ(fit({{4, Rational(2)}, {8, Rational(4)}}), "r/2");
  EXPECT_EQ(fit({{4, Rational(1)}, {8, Rational(1)}}), "1");
  EXPECT_FALSE(fit_affine({{1, Rational(1)}, {2, Rational(4)}, {3, Rational(9)}}));
}

TEST(Formula, PolynomialFitAndRendering) {
  auto fit_r = [](const std::string& f, std::vector<int> rs) {
    std::vector<Sample> s;
    for (int r : rs) s.push_back({r, 0, Formula(f).eval(r)});
    return render_polynomial(*fit_polynomial(s));
  };
  EXPECT_EQ(fit_r("(r^2+2r-1)/2", {3, 5, 7, 9}), "(r^2+2r-1)/2");
  EXPECT_EQ(fit_r("r^2/2", {2, 4, 6}), "r^2/2");
  EXPECT_EQ(fit_r("2r", {5, 6, 7}), "2r");
  std::vector<Sample> rq;
  for (int r = 5; r <= 7; ++r)
    for (int q = 1; q <= 3; ++q) rq.push_back({r, q, Rational(r * q)});
  EXPECT_EQ(render_polynomial(*fit_polynomial(rq)), "rq");
  EXPECT_FALSE(fit_polynomial({{1, 0, Rational(1)}, {2, 0, Rational(8)}, {3, 0, Rational(27)}, {4, 0, Rational(64)}}));
}

TEST(FormulaProperty, RenderedPolynomialsParseBack) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> c(-6, 6), d(1, 2);
  for (int t = 0; t < 300; ++t) {
    const Polynomial p{Rational(c(rng), d(rng)), Rational(c(rng), d(rng)), Rational(c(rng), d(rng)), Rational(c(rng)),
                       Rational(c(rng))};
    const Formula f(render_polynomial(p));
    for (int r = 1; r <= 6; ++r)
      for (int q = 0; q <= 3; ++q) EXPECT_EQ(f.eval(r, q), p.at(r, q)) << f.text();
  }
}

TEST(Formula, UnaryMinusBindsLooserThanPower) {
  EXPECT_EQ(Formula("-r^2").eval_int(3), -9);
  EXPECT_EQ(Formula("(-r)^2").eval_int(3), 9);
  EXPECT_EQ(Formula("2*-r").eval_int(3), -6);
}
