#include <gtest/gtest.h>

#include "antipodal/oracle.hpp"
#include "antipodal/quotients.hpp"

using namespace antipodal;

TEST(Oracle, RootCountsFromClosure) {
  EXPECT_EQ(oracle::enumerate_roots_oracle({Family::E8, 8}).size(), 120u);
  EXPECT_EQ(oracle::enumerate_roots_oracle({Family::F4, 4}).size(), 24u);
  EXPECT_EQ(oracle::enumerate_roots_oracle({Family::BC, 3}).size(), 12u);
  EXPECT_EQ(oracle::enumerate_roots_oracle({Family::D, 12}).size(), 132u);
}

TEST(Oracle, AgreesWithPrimaryUpToRank12) {
  for (int r = 1; r <= 12; ++r)
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::BC}) {
      if ((f == Family::B || f == Family::C) && r < 2) continue;
      if (f == Family::D && r < 3) continue;
      const auto rep = oracle::compare_roots({f, r});
      EXPECT_TRUE(rep.agreed) << rep.subject;
    }
}

TEST(Oracle, DetectsACorruptedRootList) {
  // Drop one root from a copy of the primary list and compare by hand.
  RootSystem rs = build({Family::G2, 2});
  const auto found = oracle::enumerate_roots_oracle(rs.id);
  rs.positive_roots.pop_back();
  std::set<Vector> primary;
  for (const auto& a : rs.positive_roots) primary.insert(a.vector);
  std::size_t missing = 0;
  for (const auto& v : found) missing += primary.count(v) ? 0 : 1;
  EXPECT_EQ(missing, 1u);
}

TEST(Oracle, BruteForceVerticesOfSimplex) {
  const RootSystem rs = build({Family::A, 3});
  const auto v = oracle::vertex_enumerate_bruteforce(cartan_half_spaces(rs), 3);
  EXPECT_EQ(v.size(), 4u);
}

TEST(Oracle, VertexCheckFlagsAnInfeasibleVertex) {
  const RootSystem rs = build({Family::C, 4});
  auto poly = p_gamma(rs, parse_gamma(rs, "Z_2"));
  EXPECT_TRUE(oracle::vertex_check_oracle(poly, 4).agreed);
  poly.vertices.push_back(Rational(2) * poly.corners[0]);
  poly.on_prime.push_back(false);
  poly.squared_norms.push_back(rs.norm2(poly.vertices.back()));
  EXPECT_FALSE(oracle::vertex_check_oracle(poly, 4).agreed);
}

TEST(Oracle, VertexCheckFlagsAnUnderstatedMaximum) {
  const RootSystem rs = build({Family::D, 6});
  auto poly = p_gamma(rs, parse_gamma(rs, "Z_2+Z_2"));
  // Pretend only the origin-side vertices lie on the outer boundary.
  for (std::size_t i = 0; i < poly.vertices.size(); ++i)
    if (poly.on_prime[i] && poly.squared_norms[i] > Rational(0)) poly.squared_norms[i] = Rational(0);
  EXPECT_FALSE(oracle::vertex_check_oracle(poly, 4).agreed);
}

TEST(Oracle, RankLimit) { EXPECT_THROW(oracle::enumerate_roots_oracle({Family::A, 13}), UnsupportedInputError); }
