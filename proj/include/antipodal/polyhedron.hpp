#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "antipodal/errors.hpp"
#include "antipodal/linalg.hpp"
#include "antipodal/rootsys.hpp"

namespace antipodal {

/// Subgroup of the centralizer group, recorded by the corners i with
/// p_i = exp(pi e_i) in the subgroup (identity excluded, 1-based).
struct GammaSubgroup {
  std::string label;
  std::vector<int> corner_indices;
  bool supported = true;
  std::string symbol;  // rank-generic label, e.g. "Z_{r+1}" or "{e,p_{r-1}}"

  friend bool operator==(const GammaSubgroup&, const GammaSubgroup&) = default;
};

struct CartanPolyhedron {
  RootSystem rs;
  std::vector<Vector> corners;        // e_1..e_r
  std::vector<Rational> squared_norms;
};

/// Corners e_j with alpha_i(e_j) = delta_ij / d_j.
inline CartanPolyhedron cartan_polyhedron(const RootSystem& rs) {
  CartanPolyhedron cp;
  cp.rs = rs;
  const auto rows = rs.simple_vectors();
  const auto r = rows.size();
  for (std::size_t j = 0; j < r; ++j) {
    Vector rhs = zeros(r);
    rhs[j] = Rational(1, rs.d[j]) / rs.metric_scale;
    cp.corners.push_back(solve_linear(rows, rhs));
    cp.squared_norms.push_back(rs.norm2(cp.corners.back()));
  }
  return cp;
}

/// 1-based indices of the corners of largest norm.
inline std::vector<int> maximal_corners(const CartanPolyhedron& cp) {
  const Rational best = *std::max_element(cp.squared_norms.begin(), cp.squared_norms.end());
  std::vector<int> out;
  for (std::size_t j = 0; j < cp.squared_norms.size(); ++j)
    if (cp.squared_norms[j] == best) out.push_back(static_cast<int>(j + 1));
  return out;
}

enum class ConstraintKind { SimpleRoot, HighestRoot, GammaCut };

/// normal . x <= bound under the root system's inner product.
struct HalfSpace {
  Vector normal;
  Rational bound;
  ConstraintKind kind = ConstraintKind::SimpleRoot;
  int corner = 0;  // simple root index or cut corner, 1-based; 0 for the highest root
};

/// Constraints cutting out the Cartan polyhedron: -alpha_i . x <= 0, psi . x <= 1.
inline std::vector<HalfSpace> cartan_half_spaces(const RootSystem& rs) {
  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i < rs.simple_roots.size(); ++i)
    hs.push_back({-rs.simple_roots[i].vector, Rational(0), ConstraintKind::SimpleRoot, static_cast<int>(i + 1)});
  hs.push_back({rs.highest_root.vector, Rational(1), ConstraintKind::HighestRoot, 0});
  return hs;
}

namespace detail {

using ActiveSet = std::uint64_t;

struct DdVertex {
  Vector x;
  ActiveSet active = 0;
};

inline Rational slack(const HalfSpace& h, const Vector& x, const Rational& scale) {
  return scale * inner(h.normal, x) - h.bound;
}

}  // namespace detail

/// Exact vertex enumeration of a bounded polytope of dimension `rank`.
///
/// The first rank+1 half-spaces must cut out a simplex (their normals
/// admit a strictly positive vanishing combination); both constructors
/// put the Cartan constraints first. The remaining half-spaces are added
/// one at a time by the double-description update: vertices strictly
/// violating the new constraint are dropped, and every edge from a
/// dropped vertex to a kept one contributes its crossing point. Two
/// vertices span an edge iff no third vertex is tight on every
/// constraint tight at both.
inline std::vector<Vector> vertex_enumerate(const std::vector<HalfSpace>& hs, std::size_t rank,
                                            const Rational& scale = 1) {
  using detail::ActiveSet;
  using detail::DdVertex;
  if (rank == 0) throw UnsupportedInputError("vertex_enumerate: rank must be positive");
  if (hs.size() < rank + 1) throw UnsupportedInputError("vertex_enumerate: fewer than rank+1 half-spaces");
  if (hs.size() > 64) throw UnsupportedInputError("vertex_enumerate: more than 64 half-spaces");
  const std::size_t ambient = hs.front().normal.size();
  for (const auto& h : hs) require_same_length(h.normal, hs.front().normal, "vertex_enumerate");

  // Initial simplex from the first rank+1 constraints.
  std::vector<Vector> base_normals;
  for (std::size_t k = 0; k <= rank; ++k) base_normals.push_back(hs[k].normal);
  {
    // Boundedness: the one-dimensional kernel of the combination map must
    // contain a strictly positive vector.
    std::vector<Vector> first(base_normals.begin(), base_normals.begin() + static_cast<long>(rank));
    Vector rhs(rank);
    for (std::size_t k = 0; k < rank; ++k) rhs[k] = -inner(first[k], base_normals[rank]);
    Vector lam;
    try {
      lam = solve_square(gram(first), rhs);
    } catch (const SingularSystemError&) {
      throw UnsupportedInputError("vertex_enumerate: leading constraints are degenerate");
    }
    Vector check = base_normals[rank];
    for (std::size_t k = 0; k < rank; ++k) axpy(check, lam[k], first[k]);
    if (!is_zero(check)) throw UnsupportedInputError("vertex_enumerate: leading normals do not span a rank-" + std::to_string(rank) + " space");
    for (const auto& l : lam)
      if (l.sign() <= 0) throw UnsupportedInputError("vertex_enumerate: leading constraints do not bound a simplex");
  }

  std::vector<DdVertex> verts;
  for (std::size_t skip = 0; skip <= rank; ++skip) {
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t k = 0; k <= rank; ++k) {
      if (k == skip) continue;
      rows.push_back(base_normals[k]);
      rhs.push_back(hs[k].bound / scale);
    }
    DdVertex v;
    v.x = solve_linear(rows, rhs);
    if (detail::slack(hs[skip], v.x, scale).sign() > 0)
      throw UnsupportedInputError("vertex_enumerate: leading constraints define an empty set");
    for (std::size_t k = 0; k <= rank; ++k)
      if (detail::slack(hs[k], v.x, scale).is_zero()) v.active |= ActiveSet{1} << k;
    verts.push_back(std::move(v));
  }

  const int need = static_cast<int>(rank) - 1;
  for (std::size_t h = rank + 1; h < hs.size(); ++h) {
    const ActiveSet bit = ActiveSet{1} << h;
    std::vector<Rational> val(verts.size());
    std::vector<std::size_t> plus, minus;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      val[i] = detail::slack(hs[h], verts[i].x, scale);
      if (val[i].sign() > 0) plus.push_back(i);
      else if (val[i].sign() < 0) minus.push_back(i);
    }
    if (plus.empty()) {
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (val[i].is_zero()) verts[i].active |= bit;
      continue;
    }
    std::vector<DdVertex> next;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (val[i].sign() > 0) continue;
      DdVertex v = verts[i];
      if (val[i].is_zero()) v.active |= bit;
      next.push_back(std::move(v));
    }
    if (next.empty()) throw UnsupportedInputError("vertex_enumerate: constraints define an empty set");
    for (std::size_t p : plus)
      for (std::size_t m : minus) {
        const ActiveSet common = verts[p].active & verts[m].active;
        if (std::popcount(common) < need) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < verts.size() && adjacent; ++k)
          if (k != p && k != m && (verts[k].active & common) == common) adjacent = false;
        if (!adjacent) continue;
        // Point on segment [m, p] where the new constraint is tight.
        const Rational t = val[p] / (val[p] - val[m]);
        DdVertex v;
        v.x = verts[p].x;
        axpy(v.x, t, verts[m].x - verts[p].x);
        v.active = common | bit;
        auto dup = std::find_if(next.begin(), next.end(), [&](const DdVertex& w) { return w.x == v.x; });
        if (dup != next.end()) dup->active |= v.active;
        else next.push_back(std::move(v));
      }
    verts = std::move(next);
  }

  std::vector<Vector> out;
  out.reserve(verts.size());
  for (auto& v : verts) {
    if (v.x.size() != ambient) throw DimensionError("vertex_enumerate: internal dimension drift");
    out.push_back(std::move(v.x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct PGammaPolytope {
  RootSystem rs;
  GammaSubgroup gamma;
  std::vector<Vector> corners;  // e_1..e_r of the Cartan polyhedron
  std::vector<HalfSpace> half_spaces;
  std::vector<Vector> vertices;
  std::vector<bool> on_prime;
  std::vector<Rational> squared_norms;
};

/// The Cartan polyhedron cut by (x, e_i) <= (e_i, e_i)/2 for every p_i in gamma.
inline PGammaPolytope p_gamma(const RootSystem& rs, const GammaSubgroup& gamma) {
  if (gamma.corner_indices.empty())
    throw PreconditionError("p_gamma: trivial subgroup; use the Cartan polyhedron");
  const auto cp = cartan_polyhedron(rs);
  PGammaPolytope poly;
  poly.rs = rs;
  poly.gamma = gamma;
  poly.corners = cp.corners;
  poly.half_spaces = cartan_half_spaces(rs);
  for (int i : gamma.corner_indices) {
    if (i < 1 || i > rs.rank()) throw PreconditionError("p_gamma: corner index out of range");
    const auto& e = cp.corners[static_cast<std::size_t>(i - 1)];
    poly.half_spaces.push_back({e, rs.norm2(e) / 2, ConstraintKind::GammaCut, i});
  }
  poly.vertices = vertex_enumerate(poly.half_spaces, static_cast<std::size_t>(rs.rank()), rs.metric_scale);
  for (const auto& v : poly.vertices) {
    bool prime = false;
    for (const auto& h : poly.half_spaces) {
      if (h.kind == ConstraintKind::SimpleRoot) continue;
      if (rs.inner(h.normal, v) == h.bound) prime = true;
    }
    if (prime && is_zero(v)) throw PreconditionError("p_gamma: origin lies on the outer boundary");
    poly.on_prime.push_back(prime);
    poly.squared_norms.push_back(rs.norm2(v));
  }
  return poly;
}

enum class BaseForm { SingleCorner, HalfSum, FullSum, GeneralVertex };

inline const char* to_string(BaseForm f) {
  switch (f) {
    case BaseForm::SingleCorner: return "single";
    case BaseForm::HalfSum: return "half-sum";
    case BaseForm::FullSum: return "full-sum";
    case BaseForm::GeneralVertex: return "general";
  }
  return "?";
}

/// Base point x with x/pi stored exactly.
struct BasePoint {
  BaseForm form = BaseForm::GeneralVertex;
  std::vector<int> corner_indices;  // 1-based; j for single, (j, j+1) for half-sum, 1..r for full sum
  Vector scaled_vector;

  friend bool operator==(const BasePoint&, const BasePoint&) = default;
};

inline BasePoint single_corner(const std::vector<Vector>& corners, int j) {
  return {BaseForm::SingleCorner, {j}, corners.at(static_cast<std::size_t>(j - 1))};
}

inline BasePoint half_sum(const std::vector<Vector>& corners, int j) {
  const auto u = static_cast<std::size_t>(j - 1);
  return {BaseForm::HalfSum, {j, j + 1}, Rational(1, 2) * (corners.at(u) + corners.at(u + 1))};
}

inline BasePoint full_sum(const std::vector<Vector>& corners) {
  Vector s = zeros(corners.front().size());
  std::vector<int> idx;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    s = s + corners[i];
    idx.push_back(static_cast<int>(i + 1));
  }
  return {BaseForm::FullSum, idx, Rational(1, static_cast<Rational::int_type>(corners.size() + 1)) * s};
}

/// Matches a point against e_j, (e_j + e_{j+1})/2 and (e_1 + ... + e_r)/(r+1).
inline BasePoint classify_base(const std::vector<Vector>& corners, const Vector& x) {
  const int r = static_cast<int>(corners.size());
  for (int j = 1; j <= r; ++j)
    if (corners[static_cast<std::size_t>(j - 1)] == x) return single_corner(corners, j);
  for (int j = 1; j < r; ++j) {
    auto b = half_sum(corners, j);
    if (b.scaled_vector == x) return b;
  }
  auto f = full_sum(corners);
  if (f.scaled_vector == x) return f;
  return {BaseForm::GeneralVertex, {}, x};
}

/// Vertices of P_Gamma' with maximal norm, each tagged with its form.
inline std::vector<BasePoint> max_prime(const PGammaPolytope& poly) {
  bool any = false;
  Rational best;
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
    if (!poly.on_prime[i]) continue;
    if (!any || poly.squared_norms[i] > best) best = poly.squared_norms[i];
    any = true;
  }
  std::vector<BasePoint> out;
  if (!any) return out;
  for (std::size_t i = 0; i < poly.vertices.size(); ++i)
    if (poly.on_prime[i] && poly.squared_norms[i] == best) out.push_back(classify_base(poly.corners, poly.vertices[i]));
  std::sort(out.begin(), out.end(), [](const BasePoint& a, const BasePoint& b) {
    if (a.form != b.form) return a.form < b.form;
    if (a.corner_indices != b.corner_indices) return a.corner_indices < b.corner_indices;
    return a.scaled_vector < b.scaled_vector;
  });
  return out;
}

/// Base points for the simply connected case: the maximal corners.
inline std::vector<BasePoint> maximal_bases(const CartanPolyhedron& cp) {
  std::vector<BasePoint> out;
  for (int j : maximal_corners(cp)) out.push_back(single_corner(cp.corners, j));
  return out;
}

}  // namespace antipodal
