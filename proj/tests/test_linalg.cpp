#include <gtest/gtest.h>

#include <random>

#include "antipodal/linalg.hpp"

using namespace antipodal;

TEST(Linalg, InnerAndOperators) {
  const Vector u = {Rational(1), Rational(1, 2), Rational(0)};
  const Vector v = {Rational(2), Rational(-2), Rational(5)};
  EXPECT_EQ(inner(u, v), Rational(1));
  EXPECT_EQ(u + v, (Vector{Rational(3), Rational(-3, 2), Rational(5)}));
  EXPECT_EQ(Rational(2) * u, (Vector{Rational(2), Rational(1), Rational(0)}));
  EXPECT_TRUE(is_zero(u - u));
  EXPECT_EQ(to_string(u), "(1, 1/2, 0)");
  EXPECT_THROW(inner(u, Vector{Rational(1)}), DimensionError);
}

TEST(Linalg, SolveSquare) {
  const Matrix a = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  const Vector x = solve_square(a, {Rational(3), Rational(5)});
  EXPECT_EQ(x, (Vector{Rational(4, 5), Rational(7, 5)}));
  EXPECT_THROW(solve_square({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, {Rational(1), Rational(2)}),
               SingularSystemError);
}

TEST(Linalg, SolveLinearFindsPointInSpan) {
  // Two constraints in R^3: the answer lies in the span of the rows.
  const std::vector<Vector> rows = {{Rational(1), Rational(-1), Rational(0)}, {Rational(0), Rational(1), Rational(-1)}};
  const Vector x = solve_linear(rows, {Rational(1), Rational(0)});
  EXPECT_EQ(inner(rows[0], x), Rational(1));
  EXPECT_EQ(inner(rows[1], x), Rational(0));
  EXPECT_EQ(x[0] + x[1] + x[2], Rational(0));
  EXPECT_THROW(solve_linear({rows[0], Rational(2) * rows[0]}, {Rational(1), Rational(2)}), SingularSystemError);
}

TEST(LinalgProperty, RandomNonsingularSystemsRoundTrip) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> entry(-4, 4), size(1, 6);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(size(rng));
    Matrix a(n, Vector(n));
    Vector x(n);
    for (auto& row : a)
      for (auto& v : row) v = Rational(entry(rng));
    for (auto& v : x) v = Rational(entry(rng), 1 + (entry(rng) + 4) % 3);
    Vector b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = inner(a[i], x);
    try {
      EXPECT_EQ(solve_square(a, b), x);
      EXPECT_EQ(solve_linear(a, b), x);
      ++solved;
    } catch (const SingularSystemError&) {
    }
  }
  EXPECT_GT(solved, 200);
}
