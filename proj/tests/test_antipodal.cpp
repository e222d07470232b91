#include <gtest/gtest.h>

#include <random>

#include "antipodal/antipodal.hpp"
#include "antipodal/tables.hpp"

using namespace antipodal;

TEST(Antipodal, SpinOddHasOneOrbitOfDimension2r) {
  const auto rep = antipodal_report(space_by_id("Spin-odd"), {5, 0});
  ASSERT_EQ(rep.orbits.size(), 1u);
  EXPECT_EQ(rep.orbits[0].dimension, 10);
  EXPECT_EQ(rep.status, ReportStatus::PaperValidated);
}

TEST(Antipodal, ExceptionalSpotValues) {
  EXPECT_EQ(antipodal_report(space_by_id("EVIII"), {}).dimensions(), (std::vector<long>{64}));
  EXPECT_EQ(antipodal_report(space_by_id("E8"), {}).dimensions(), (std::vector<long>{128}));
  EXPECT_EQ(antipodal_report(space_by_id("G2"), {}).dimensions(), (std::vector<long>{6}));
  EXPECT_EQ(antipodal_report(space_by_id("Spin9"), {4, 0}).dimensions(), (std::vector<long>{0, 8}));
  EXPECT_EQ(antipodal_report(space_by_id("EI-Z3"), {}).dimensions(), (std::vector<long>{27}));
  EXPECT_EQ(antipodal_report(space_by_id("E7-Z2"), {}).dimensions(), (std::vector<long>{70}));
}

TEST(Antipodal, QuotientFormulas) {
  EXPECT_EQ(antipodal_report(space_by_id("CII-Z2-odd"), {3, 0}).dimensions(), (std::vector<long>{27}));
  EXPECT_EQ(antipodal_report(space_by_id("Sp-Z2-even"), {4, 0}).dimensions(), (std::vector<long>{16}));
  EXPECT_EQ(antipodal_report(space_by_id("SU-Zr1"), {4, 0}).dimensions(), (std::vector<long>{20}));
}

TEST(Antipodal, AllMaximalCornersAreReported) {
  const auto rep = antipodal_report(space_by_id("AI-odd"), {3, 0});
  ASSERT_EQ(rep.orbits.size(), 2u);
  EXPECT_EQ(rep.orbits[0].base.corner_indices, std::vector<int>{3});
  EXPECT_EQ(rep.orbits[1].base.corner_indices, std::vector<int>{4});
}

TEST(Antipodal, ExcludedCasesNeedOptIn) {
  const auto& s = space_by_id("AI-other");
  const auto rep = antipodal_report(s, {7, 0}, std::string("Z_4"));
  EXPECT_EQ(rep.status, ReportStatus::ExcludedUnknown);
  EXPECT_TRUE(rep.orbits.empty());
  const auto forced = antipodal_report(s, {7, 0}, std::string("Z_4"), true);
  EXPECT_EQ(forced.status, ReportStatus::ComputedNotValidated);
  EXPECT_FALSE(forced.orbits.empty());
  // The supported subgroups belong to other rows.
  EXPECT_THROW(antipodal_report(s, {7, 0}, std::string("Z_2")), AdmissibilityError);
}

TEST(Antipodal, AdmissibilityAndParams) {
  EXPECT_THROW(antipodal_report(space_by_id("EVIII"), {}, std::string("Z_2")), AdmissibilityError);
  EXPECT_THROW(antipodal_report(space_by_id("BDI-d-p1"), {6, 0}, std::string("Z_2+Z_2")), AdmissibilityError);
  EXPECT_THROW(antipodal_report(space_by_id("BDI-b"), {3, 1}), RangeError);
  EXPECT_THROW(antipodal_report(space_by_id("BDI-d-pr-small"), {4, 0}), AdmissibilityError);
}

TEST(Antipodal, DeckIdentifiedOrbitsShareAComponent) {
  const auto rep = antipodal_report(space_by_id("AI-Z2-0"), {3, 0}, std::string("Z_2"));
  ASSERT_EQ(rep.orbits.size(), 2u);
  EXPECT_EQ(rep.orbits[0].deck_class, rep.orbits[1].deck_class);
  EXPECT_EQ(rep.component_dimensions(), std::vector<long>{0});
}

TEST(Antipodal, JSetsOnSmallCases) {
  // b_r at e_r: the roots with odd last coefficient, i.e. the short ones.
  const RootSystem b4 = build({Family::B, 4});
  const auto j = j_single(b4, 4);
  EXPECT_EQ(j.size(), 4u);
  for (std::size_t i : j) EXPECT_EQ(b4.positive_roots[i].length_class, LengthClass::Short);
  EXPECT_THROW(j_single(b4, 0), RangeError);
  EXPECT_THROW(j_pair(b4, 4), RangeError);
}

// The unified test and the specialized J-sets agree, and J(x) is disjoint
// from Sigma_x, on random tagged points.
TEST(AntipodalProperty, UnifiedTestMatchesSpecializedSets) {
  std::mt19937 rng(31337);
  const std::vector<Family> fams = {Family::A, Family::B, Family::C, Family::D, Family::BC};
  for (int t = 0; t < 60; ++t) {
    const Family f = fams[std::uniform_int_distribution<std::size_t>(0, fams.size() - 1)(rng)];
    const int r = std::uniform_int_distribution<int>(f == Family::D ? 3 : 2, 9)(rng);
    const RootSystem rs = build({f, r});
    const auto cp = cartan_polyhedron(rs);
    const int j = std::uniform_int_distribution<int>(1, r - 1)(rng);
    for (const auto& b : {single_corner(cp.corners, j), half_sum(cp.corners, j)}) {
      EXPECT_EQ(tangent_roots(rs, b), *specialized_j_set(rs, b)) << to_string(rs.id);
      const auto sx = sigma_x(rs, b);
      EXPECT_TRUE(subsystem_check(sx));
      for (std::size_t k : sx.members) EXPECT_TRUE(rs.inner(rs.positive_roots[k].vector, b.scaled_vector).is_zero());
    }
  }
}

TEST(AntipodalProperty, DimensionIsAtMostDimM) {
  for (const auto& s : spaces()) {
    if (s.excluded) continue;
    for (const auto& p : tables::param_grid(s, 6, 2)) {
      const long dm = dim_space(s, p);
      std::vector<std::optional<std::string>> labels;
      if (s.simply_connected()) labels.emplace_back();
      for (const auto& g : s.gammas) labels.emplace_back(g);
      for (const auto& label : labels)
        for (const auto& o : antipodal_report(s, p, label).orbits) {
          EXPECT_GE(o.dimension, 0);
          EXPECT_LT(o.dimension, dm) << s.id;
        }
    }
  }
}
