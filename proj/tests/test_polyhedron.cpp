#include <gtest/gtest.h>

#include <random>

#include "antipodal/oracle.hpp"
#include "antipodal/polyhedron.hpp"
#include "antipodal/quotients.hpp"

using namespace antipodal;

TEST(Polyhedron, CornersAreDualToSimpleRoots) {
  for (const RootSystemId id : {RootSystemId{Family::E8, 8}, RootSystemId{Family::B, 5}, RootSystemId{Family::G2, 2}}) {
    const RootSystem rs = build(id);
    const auto cp = cartan_polyhedron(rs);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        const Rational v = rs.inner(rs.simple_roots[i].vector, cp.corners[j]);
        EXPECT_EQ(v, i == j ? Rational(1, rs.d[j]) : Rational(0));
      }
    for (const auto& e : cp.corners) EXPECT_EQ(rs.inner(rs.highest_root.vector, e), Rational(1));
  }
}

TEST(Polyhedron, MaximalCornersSpotChecks) {
  auto mc = [](Family f, int r) { return maximal_corners(cartan_polyhedron(build({f, r}))); };
  EXPECT_EQ(mc(Family::A, 6), (std::vector<int>{3, 4}));
  EXPECT_EQ(mc(Family::B, 4), (std::vector<int>{1, 4}));
  EXPECT_EQ(mc(Family::D, 4), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(mc(Family::G2, 2), (std::vector<int>{1}));
}

TEST(Polyhedron, CartanPolytopeIsTheSimplex) {
  const RootSystem rs = build({Family::F4, 4});
  const auto cp = cartan_polyhedron(rs);
  auto verts = vertex_enumerate(cartan_half_spaces(rs), 4);
  std::vector<Vector> want{zeros(rs.ambient_dim)};
  want.insert(want.end(), cp.corners.begin(), cp.corners.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(verts, want);
}

TEST(Polyhedron, VertexEnumeratorRejectsBadInput) {
  const RootSystem rs = build({Family::A, 2});
  EXPECT_THROW(vertex_enumerate(cartan_half_spaces(rs), 0), UnsupportedInputError);
  auto hs = cartan_half_spaces(rs);
  hs.pop_back();
  EXPECT_THROW(vertex_enumerate(hs, 2), UnsupportedInputError);
  EXPECT_THROW(p_gamma(rs, GammaSubgroup{}), PreconditionError);
}

TEST(Polyhedron, ClassifiesBaseForms) {
  const RootSystem rs = build({Family::C, 5});
  const auto cp = cartan_polyhedron(rs);
  EXPECT_EQ(classify_base(cp.corners, cp.corners[2]).form, BaseForm::SingleCorner);
  const auto h = classify_base(cp.corners, half_sum(cp.corners, 2).scaled_vector);
  EXPECT_EQ(h.form, BaseForm::HalfSum);
  EXPECT_EQ(h.corner_indices, (std::vector<int>{2, 3}));
  EXPECT_EQ(classify_base(cp.corners, full_sum(cp.corners).scaled_vector).form, BaseForm::FullSum);
  EXPECT_EQ(classify_base(cp.corners, Rational(1, 3) * cp.corners[0]).form, BaseForm::GeneralVertex);
}

TEST(Polyhedron, CornerOfCOddGammaIsHalfSum) {
  const RootSystem rs = build({Family::C, 5});
  const auto bases = max_prime(p_gamma(rs, parse_gamma(rs, "Z_2")));
  ASSERT_EQ(bases.size(), 1u);
  EXPECT_EQ(bases[0].form, BaseForm::HalfSum);
  EXPECT_EQ(bases[0].corner_indices, (std::vector<int>{2, 3}));
}

// Double description against the exhaustive subset search.
TEST(PolyhedronProperty, VertexEnumerationMatchesBruteForce) {
  std::mt19937 rng(777);
  const std::vector<RootSystemId> ids = {{Family::A, 3}, {Family::A, 5}, {Family::A, 7}, {Family::B, 4},
                                         {Family::C, 4}, {Family::C, 5}, {Family::D, 4}, {Family::D, 5},
                                         {Family::D, 6}, {Family::E6, 6}, {Family::E7, 7}};
  for (const auto& id : ids) {
    const RootSystem rs = build(id);
    for (const auto& g : subgroups(rs)) {
      if (g.corner_indices.empty()) continue;
      const auto poly = p_gamma(rs, g);
      const auto brute = oracle::vertex_enumerate_bruteforce(poly.half_spaces, static_cast<std::size_t>(rs.rank()));
      EXPECT_EQ(poly.vertices, brute) << to_string(id) << " " << g.label;
    }
    // Random extra cuts through the corners keep the two methods in step.
    const auto cp = cartan_polyhedron(rs);
    auto hs = cartan_half_spaces(rs);
    std::uniform_int_distribution<int> pick(0, rs.rank() - 1);
    for (int k = 0; k < 2; ++k) {
      const auto& e = cp.corners[static_cast<std::size_t>(pick(rng))];
      hs.push_back({e, rs.norm2(e) * Rational(1 + pick(rng), 2 * rs.rank()), ConstraintKind::GammaCut, 0});
    }
    EXPECT_EQ(vertex_enumerate(hs, static_cast<std::size_t>(rs.rank())),
              oracle::vertex_enumerate_bruteforce(hs, static_cast<std::size_t>(rs.rank())))
        << to_string(id);
  }
}

TEST(PolyhedronProperty, MaxPrimePointsAreFeasibleAndOnTheOuterBoundary) {
  for (int r = 3; r <= 9; ++r) {
    const RootSystem rs = build({Family::D, r + 1});
    for (const auto& g : subgroups(rs)) {
      const auto poly = p_gamma(rs, g);
      const auto rep = oracle::vertex_check_oracle(poly, 4, 11, 60);
      EXPECT_TRUE(rep.agreed) << rep.subject;
      for (const auto& b : max_prime(poly)) {
        EXPECT_TRUE(oracle::feasible(poly, b.scaled_vector));
        bool outer = false;
        for (const auto& h : poly.half_spaces)
          if (h.kind != ConstraintKind::SimpleRoot && rs.inner(h.normal, b.scaled_vector) == h.bound) outer = true;
        EXPECT_TRUE(outer);
      }
    }
  }
}
