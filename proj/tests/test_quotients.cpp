#include <gtest/gtest.h>

#include <numeric>

#include "antipodal/quotients.hpp"

using namespace antipodal;

TEST(Quotients, CenterLabels) {
  EXPECT_EQ(center(build({Family::A, 5})).group_iso, "Z_6");
  EXPECT_EQ(center(build({Family::D, 6})).group_iso, "Z_2+Z_2");
  EXPECT_EQ(center(build({Family::D, 7})).group_iso, "Z_4");
  EXPECT_EQ(center(build({Family::E8, 8})).group_iso, "trivial");
  EXPECT_EQ(center(build({Family::E6, 6})).order_one_corners, (std::vector<int>{1, 6}));
}

TEST(Quotients, ParseGammaLabels) {
  const RootSystem d6 = build({Family::D, 6});
  EXPECT_EQ(parse_gamma(d6, "{e,p_5}").corner_indices, (std::vector<int>{5}));
  EXPECT_EQ(parse_gamma(d6, "{e,p_{r-1}}").corner_indices, (std::vector<int>{5}));
  EXPECT_EQ(parse_gamma(d6, "Z2+Z2").corner_indices, (std::vector<int>{1, 5, 6}));
  EXPECT_THROW(parse_gamma(d6, "Z_4"), AdmissibilityError);

  const RootSystem a7 = build({Family::A, 7});
  const auto z4 = parse_gamma(a7, "Z_4");
  EXPECT_FALSE(z4.supported);
  EXPECT_EQ(z4.corner_indices, (std::vector<int>{2, 4, 6}));
  EXPECT_TRUE(parse_gamma(a7, "Z_8").supported);
  EXPECT_THROW(parse_gamma(a7, "Z_3"), AdmissibilityError);
}

TEST(Quotients, DeckPermutationsAreDiagramAutomorphisms) {
  // a_r: p_1 rotates the extended diagram.
  const RootSystem a4 = build({Family::A, 4});
  EXPECT_EQ(deck_permutation(a4, 1), (std::vector<int>{1, 2, 3, 4, 0}));
  // d_r: p_1 swaps 0 <-> 1 and r-1 <-> r.
  const RootSystem d5 = build({Family::D, 5});
  EXPECT_EQ(deck_permutation(d5, 1), (std::vector<int>{1, 0, 2, 3, 5, 4}));
  EXPECT_THROW(deck_permutation(d5, 2), PreconditionError);
}

TEST(QuotientsProperty, DeckPermutationsPreserveHighestRootFactorsAndOrder) {
  for (const RootSystemId id : {RootSystemId{Family::A, 7}, RootSystemId{Family::B, 6}, RootSystemId{Family::C, 5},
                                RootSystemId{Family::D, 6}, RootSystemId{Family::D, 7}, RootSystemId{Family::E6, 6},
                                RootSystemId{Family::E7, 7}}) {
    const RootSystem rs = build(id);
    std::vector<int> d{1};
    d.insert(d.end(), rs.d.begin(), rs.d.end());
    for (int j : center(rs).order_one_corners) {
      const auto p = deck_permutation(rs, j);
      EXPECT_EQ(p[0], j) << to_string(id);
      for (std::size_t v = 0; v < p.size(); ++v) EXPECT_EQ(d[v], d[static_cast<std::size_t>(p[v])]) << to_string(id);
      // The permutation has finite order dividing the center's order.
      std::vector<int> q(p.size());
      std::iota(q.begin(), q.end(), 0);
      int order = 0;
      do {
        for (auto& x : q) x = p[static_cast<std::size_t>(x)];
        ++order;
      } while (!std::is_sorted(q.begin(), q.end()) && order < 32);
      EXPECT_EQ(static_cast<int>(center(rs).order_one_corners.size() + 1) % order, 0) << to_string(id);
    }
  }
}

TEST(Quotients, DeckClassesJoinImages) {
  const RootSystem d4 = build({Family::D, 4});
  const auto cp = cartan_polyhedron(d4);
  const auto g = parse_gamma(d4, "{e,p_3}");
  EXPECT_EQ(deck_classes(d4, g, {cp.corners[0], cp.corners[3]}), (std::vector<int>{0, 0}));
  const auto p1 = parse_gamma(d4, "{e,p_1}");
  EXPECT_EQ(deck_classes(d4, p1, {cp.corners[2], cp.corners[3]}), (std::vector<int>{0, 0}));
  EXPECT_EQ(deck_classes(d4, p1, {cp.corners[0], cp.corners[1]}), (std::vector<int>{0, 1}));
}
