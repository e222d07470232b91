#include <gtest/gtest.h>

#include <set>

#include "antipodal/catalog.hpp"
#include "antipodal/golden.hpp"
#include "antipodal/tables.hpp"

using namespace antipodal;

TEST(Catalog, IdsAreUniqueAndCoverTheTables) {
  std::set<std::string> ids;
  std::map<int, int> per_table;
  for (const auto& s : spaces()) {
    EXPECT_TRUE(ids.insert(s.id).second) << s.id;
    ++per_table[s.table];
  }
  std::set<std::string> published;
  for (const auto& g : golden::dimension_tables()) published.insert(g.id);
  EXPECT_EQ(ids, published);
  EXPECT_EQ(per_table[3], 29);
  EXPECT_EQ(per_table[5], 13);
}

TEST(Catalog, LookupByNameLabelAndId) {
  EXPECT_EQ(space_by_id("EVIII").name, "(e8, so(16))");
  EXPECT_THROW(space_by_id("nope"), MembershipError);
  EXPECT_EQ(find_spaces("e viii").size(), 1u);
  EXPECT_EQ(find_spaces("AI-even").size(), 1u);
  EXPECT_GT(find_spaces("A I").size(), 4u);
  EXPECT_TRUE(find_spaces("nothing").empty());
}

TEST(Catalog, SigmaAndRank) {
  const auto& s = space_by_id("AI-even");
  EXPECT_EQ(s.sigma({3, 0}), (RootSystemId{Family::A, 5}));
  EXPECT_EQ(s.sigma_label(), "a_{2r-1}");
  EXPECT_EQ(space_by_id("G2").sigma_label(), "g2");
  EXPECT_EQ(space_by_id("AIII-bc").sigma_label(), "bc_r");
}

TEST(Catalog, ParameterChecks) {
  EXPECT_THROW(check_params(space_by_id("BDI-b"), {4, 1}), RangeError);
  EXPECT_THROW(check_params(space_by_id("BDI-b"), {5, 0}), RangeError);
  EXPECT_NO_THROW(check_params(space_by_id("BDI-b"), {5, 2}));
  EXPECT_THROW(check_params(space_by_id("Sp-Z2-odd"), {4, 0}), RangeError);
}

TEST(Catalog, MultiplicitiesSpotChecks) {
  const auto& s = space_by_id("AIII-bc");
  const auto m = multiplicity_table(s, {3, 2});
  EXPECT_EQ(m.at(LengthClass::Short), 4);
  EXPECT_EQ(m.at(LengthClass::Medium), 2);
  EXPECT_EQ(m.at(LengthClass::Long), 1);
  EXPECT_EQ(dim_space(s, {3, 2}), 30);
  EXPECT_EQ(dim_space(space_by_id("EVIII"), {}), 128);
  EXPECT_EQ(dim_space(space_by_id("G2"), {}), 14);
}

TEST(CatalogProperty, DimensionFormulaAgreesOnGrid) {
  for (const auto& s : spaces())
    for (const auto& p : tables::param_grid(s)) EXPECT_NO_THROW(dim_space(s, p)) << s.id << " r=" << p.r << " q=" << p.q;
}

TEST(CatalogProperty, StoredDimsMatchPublishedStrings) {
  for (const auto& s : spaces()) EXPECT_EQ(s.dims, golden::dimension_entry(s.id).dims) << s.id;
}
