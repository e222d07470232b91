#include <gtest/gtest.h>

#include <random>
#include <set>

#include "antipodal/oracle.hpp"
#include "antipodal/rootsys.hpp"

using namespace antipodal;

namespace {

std::vector<RootSystemId> all_ids(int max_rank) {
  std::vector<RootSystemId> ids;
  for (int r = 1; r <= max_rank; ++r) {
    ids.push_back({Family::A, r});
    ids.push_back({Family::BC, r});
    if (r >= 2) ids.push_back({Family::B, r});
    if (r >= 2) ids.push_back({Family::C, r});
    if (r >= 3) ids.push_back({Family::D, r});
  }
  for (Family f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2}) ids.push_back({f, exceptional_rank(f)});
  return ids;
}

}  // namespace

TEST(RootSystem, ExceptionalHighestRoots) {
  EXPECT_EQ(build({Family::E6, 6}).d, (std::vector<int>{1, 2, 2, 3, 2, 1}));
  EXPECT_EQ(build({Family::E7, 7}).d, (std::vector<int>{2, 2, 3, 4, 3, 2, 1}));
  EXPECT_EQ(build({Family::E8, 8}).d, (std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2}));
  EXPECT_EQ(build({Family::F4, 4}).d, (std::vector<int>{2, 3, 4, 2}));
  EXPECT_EQ(build({Family::G2, 2}).d, (std::vector<int>{3, 2}));
}

TEST(RootSystem, ClassicalHighestRoots) {
  EXPECT_EQ(build({Family::A, 4}).d, (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(build({Family::B, 4}).d, (std::vector<int>{1, 2, 2, 2}));
  EXPECT_EQ(build({Family::C, 4}).d, (std::vector<int>{2, 2, 2, 1}));
  EXPECT_EQ(build({Family::D, 5}).d, (std::vector<int>{1, 2, 2, 1, 1}));
  EXPECT_EQ(build({Family::BC, 3}).d, (std::vector<int>{2, 2, 2}));
}

TEST(RootSystem, RejectsInvalidRanks) {
  EXPECT_THROW(build({Family::D, 2}), std::invalid_argument);
  EXPECT_THROW(build({Family::B, 1}), std::invalid_argument);
  EXPECT_THROW(build({Family::E6, 7}), std::invalid_argument);
  EXPECT_THROW(build({Family::A, 0}), std::invalid_argument);
}

TEST(RootSystem, NamesAreAscii) {
  EXPECT_EQ(to_string(RootSystemId{Family::G2, 2}), "g2");
  EXPECT_EQ(to_string(RootSystemId{Family::A, 3}), "a3");
  EXPECT_EQ(to_string(RootSystemId{Family::BC, 2}), "bc2");
}

TEST(RootSystem, PositiveRootsMatchReflectionOracle) {
  for (const auto& id : all_ids(8)) {
    const auto rep = oracle::compare_roots(id);
    EXPECT_TRUE(rep.agreed) << rep.subject;
  }
}

TEST(RootSystemProperty, SimpleReflectionsPermuteRoots) {
  std::mt19937 rng(2026);
  const auto ids = all_ids(10);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& id = ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)];
    const RootSystem rs = build(id);
    std::set<Vector> all;
    for (const auto& a : rs.positive_roots) {
      all.insert(a.vector);
      all.insert(-a.vector);
    }
    EXPECT_EQ(rs.positive_roots.size(), expected_positive_count(id)) << to_string(id);
    for (std::size_t i = 0; i < rs.simple_roots.size(); ++i)
      for (const auto& a : rs.positive_roots) EXPECT_TRUE(all.count(reflect(rs, i, a.vector))) << to_string(id);
    // Coefficients are non-negative, reconstruct the vector, and stay below d.
    for (const auto& a : rs.positive_roots) {
      Vector v = zeros(rs.ambient_dim);
      for (std::size_t k = 0; k < a.coefficients.size(); ++k) {
        EXPECT_GE(a.coefficients[k], 0);
        EXPECT_LE(a.coefficients[k], rs.d[k]);
        axpy(v, Rational(a.coefficients[k]), rs.simple_roots[k].vector);
      }
      EXPECT_EQ(v, a.vector);
    }
    // The highest root is dominant.
    for (const auto& s : rs.simple_roots) EXPECT_GE(inner(rs.highest_root.vector, s.vector), Rational(0));
  }
}

TEST(RootSystemProperty, ScaleOnlyRescalesInnerProducts) {
  for (const auto& id : all_ids(6)) {
    const RootSystem a = build(id), b = build(id, Rational(1, 3));
    ASSERT_EQ(a.positive_roots.size(), b.positive_roots.size());
    EXPECT_EQ(a.d, b.d);
    for (std::size_t i = 0; i < a.positive_roots.size(); ++i)
      EXPECT_EQ(b.norm2(b.positive_roots[i].vector) * Rational(3), a.norm2(a.positive_roots[i].vector));
  }
}

TEST(RootSystem, SubsystemClosure) {
  const RootSystem rs = build({Family::A, 3});
  RootSubsystem all{&rs, {}};
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) all.members.push_back(i);
  EXPECT_TRUE(subsystem_check(all));
  // alpha_1 and alpha_2 without alpha_1 + alpha_2 is not closed.
  RootSubsystem broken{&rs, {static_cast<std::size_t>(rs.find_positive(rs.simple_roots[0].vector)),
                             static_cast<std::size_t>(rs.find_positive(rs.simple_roots[1].vector))}};
  EXPECT_FALSE(subsystem_check(broken));
}
