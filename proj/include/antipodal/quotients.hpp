#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "antipodal/errors.hpp"
#include "antipodal/polyhedron.hpp"
#include "antipodal/rootsys.hpp"

namespace antipodal {

struct CenterDescription {
  RootSystemId rs_id;
  std::vector<int> order_one_corners;  // {i : d_i = 1}, 1-based
  std::string group_iso;
};

inline CenterDescription center(const RootSystem& rs) {
  CenterDescription c;
  c.rs_id = rs.id;
  for (std::size_t i = 0; i < rs.d.size(); ++i)
    if (rs.d[i] == 1) c.order_one_corners.push_back(static_cast<int>(i + 1));
  const int r = rs.rank();
  switch (rs.id.family) {
    case Family::A: c.group_iso = "Z_" + std::to_string(r + 1); break;
    case Family::B:
    case Family::C:
    case Family::E7: c.group_iso = "Z_2"; break;
    case Family::D: c.group_iso = r % 2 == 0 ? "Z_2+Z_2" : "Z_4"; break;
    case Family::E6: c.group_iso = "Z_3"; break;
    default: c.group_iso = "trivial"; break;
  }
  if (c.order_one_corners.empty() != (c.group_iso == "trivial"))
    throw ConstructionError("center: order-one corners disagree with the group label for " + to_string(rs.id));
  return c;
}

/// Cyclic subgroup Z_k of the a_r center Z_{r+1}; generated by p_{(r+1)/k}.
/// Only Z_2 and Z_{r+1} have known maxima.
inline GammaSubgroup a_cyclic_subgroup(int r, int k) {
  if (k < 2 || (r + 1) % k != 0)
    throw AdmissibilityError("Z_" + std::to_string(k) + " is not a subgroup of Z_" + std::to_string(r + 1));
  GammaSubgroup g;
  g.label = "Z_" + std::to_string(k);
  const int step = (r + 1) / k;
  for (int i = step; i <= r; i += step) g.corner_indices.push_back(i);
  g.supported = k == 2 || k == r + 1;
  if (k == r + 1) g.symbol = "Z_{r+1}";
  else if (k == 2) g.symbol = "Z_2";
  else g.symbol = "otherwise";
  return g;
}

/// Marker standing for every a_r subgroup other than Z_2 and Z_{r+1}.
inline GammaSubgroup a_otherwise_marker() { return {"otherwise", {}, false, "otherwise"}; }

/// Nontrivial subgroups catalogued for the root system.
inline std::vector<GammaSubgroup> subgroups(const RootSystem& rs) {
  const int r = rs.rank();
  std::vector<GammaSubgroup> out;
  switch (rs.id.family) {
    case Family::A:
      if (r % 2 == 1 && r >= 3) out.push_back(a_cyclic_subgroup(r, 2));
      out.push_back(a_cyclic_subgroup(r, r + 1));
      out.push_back(a_otherwise_marker());
      break;
    case Family::B: out.push_back({"Z_2", {1}, true, "Z_2"}); break;
    case Family::C: out.push_back({"Z_2", {r}, true, "Z_2"}); break;
    case Family::D:
      if (r % 2 == 0) {
        out.push_back({"Z_2+Z_2", {1, r - 1, r}, true, "Z_2+Z_2"});
        out.push_back({"{e,p_1}", {1}, true, "{e,p_1}"});
        out.push_back({"{e,p_" + std::to_string(r - 1) + "}", {r - 1}, true, "{e,p_{r-1}}"});
        out.push_back({"{e,p_" + std::to_string(r) + "}", {r}, true, "{e,p_r}"});
      } else {
        out.push_back({"Z_4", {1, r - 1, r}, true, "Z_4"});
        out.push_back({"{e,p_1}", {1}, true, "{e,p_1}"});
      }
      break;
    case Family::E6: out.push_back({"Z_3", {1, 6}, true, "Z_3"}); break;
    case Family::E7: out.push_back({"Z_2", {7}, true, "Z_2"}); break;
    default: break;
  }
  for (const auto& g : out)
    for (int i : g.corner_indices)
      if (rs.d.at(static_cast<std::size_t>(i - 1)) != 1)
        throw ConstructionError("subgroup " + g.label + " uses corner " + std::to_string(i) + " with d != 1");
  return out;
}

namespace detail {

inline std::string normalize_gamma_label(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    // U+2295 (circled plus) is E2 8A 95 in UTF-8.
    if (c == 0xE2 && i + 2 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x8A &&
        static_cast<unsigned char>(s[i + 2]) == 0x95) {
      out += '+';
      i += 2;
      continue;
    }
    if (std::isspace(c) || c == '_' || c == '{' || c == '}' || c == '(' || c == ')') continue;
    out += static_cast<char>(std::tolower(c));
  }
  for (std::size_t p; (p = out.find('x')) != std::string::npos;) out[p] = '+';
  return out;
}

}  // namespace detail

/// Resolves a user-supplied subgroup label such as "Z_2", "Z4", "{e,p_1}",
/// "Z_2+Z_2" or "Z_{r+1}" against the catalogue of the root system.
/// For a_r any cyclic Z_k with k | r+1 resolves, flagged unsupported unless
/// k is 2 or r+1.
inline GammaSubgroup parse_gamma(const RootSystem& rs, const std::string& text) {
  const std::string want = detail::normalize_gamma_label(text);
  const int r = rs.rank();
  for (const auto& g : subgroups(rs)) {
    if (g.corner_indices.empty()) continue;
    if (detail::normalize_gamma_label(g.label) == want || detail::normalize_gamma_label(g.symbol) == want) return g;
  }
  if (rs.id.family == Family::A && want.size() > 1 && want[0] == 'z') {
    const std::string digits = want.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return a_cyclic_subgroup(r, std::stoi(digits));
  }
  throw AdmissibilityError("subgroup '" + text + "' is not catalogued for " + to_string(rs.id));
}

/// Reduced word of the longest element of the parabolic subgroup generated
/// by simple reflections s_i for i not in `excluded` (1-based). Found by
/// reflecting a vector regular for that subgroup until it is antidominant.
inline std::vector<std::size_t> longest_word(const RootSystem& rs, const std::vector<int>& excluded = {}) {
  const auto cp = cartan_polyhedron(rs);
  const auto r = static_cast<std::size_t>(rs.rank());
  auto allowed = [&](std::size_t i) {
    return std::find(excluded.begin(), excluded.end(), static_cast<int>(i + 1)) == excluded.end();
  };
  Vector v = zeros(rs.ambient_dim);
  for (std::size_t i = 0; i < r; ++i)
    if (allowed(i)) v = v + cp.corners[i];
  std::vector<std::size_t> word;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < r; ++i) {
      if (!allowed(i) || inner(rs.simple_roots[i].vector, v).sign() <= 0) continue;
      v = reflect(rs, i, v);
      word.push_back(i);
      moved = true;
      break;
    }
  }
  return word;
}

inline Vector apply_word(const RootSystem& rs, const std::vector<std::size_t>& word, Vector v) {
  // The word was recorded as successive reflections of a vector; replaying
  // it in the same order applies the same group element.
  for (std::size_t i : word) v = reflect(rs, i, v);
  return v;
}

/// Deck transformations x -> e_j + w_{0,j}(w_0(x)) on the closed alcove,
/// one per central corner j. The Weyl words are computed once.
class DeckAction {
 public:
  explicit DeckAction(const RootSystem& rs) : rs_(rs), corners_(cartan_polyhedron(rs).corners), w0_(longest_word(rs)) {}

  [[nodiscard]] Vector image(int j, const Vector& x) const {
    if (j < 1 || j > rs_.rank() || rs_.d[static_cast<std::size_t>(j - 1)] != 1)
      throw PreconditionError("deck transformation: corner " + std::to_string(j) + " is not central");
    auto it = w0j_.find(j);
    if (it == w0j_.end()) it = w0j_.emplace(j, longest_word(rs_, {j})).first;
    return corners_[static_cast<std::size_t>(j - 1)] + apply_word(rs_, it->second, apply_word(rs_, w0_, x));
  }

  [[nodiscard]] const std::vector<Vector>& corners() const { return corners_; }

 private:
  const RootSystem& rs_;
  std::vector<Vector> corners_;
  std::vector<std::size_t> w0_;
  mutable std::map<int, std::vector<std::size_t>> w0j_;
};

inline Vector deck_image(const RootSystem& rs, int j, const Vector& x) { return DeckAction(rs).image(j, x); }

/// Permutation of the alcove vertices {0, e_1, ..., e_r} (index 0 is the
/// origin) induced by the deck transformation of p_j.
inline std::vector<int> deck_permutation(const RootSystem& rs, int j) {
  const DeckAction deck(rs);
  std::vector<Vector> verts{zeros(rs.ambient_dim)};
  verts.insert(verts.end(), deck.corners().begin(), deck.corners().end());
  std::vector<int> perm;
  for (const auto& v : verts) {
    const Vector img = deck.image(j, v);
    auto it = std::find(verts.begin(), verts.end(), img);
    if (it == verts.end()) throw ConstructionError("deck_permutation: image is not an alcove vertex");
    perm.push_back(static_cast<int>(it - verts.begin()));
  }
  return perm;
}

/// Groups points of the alcove into classes identified by the deck
/// transformations of gamma. Returns a class label per point, labels
/// numbered by first appearance.
inline std::vector<int> deck_classes(const RootSystem& rs, const GammaSubgroup& gamma, const std::vector<Vector>& pts) {
  std::vector<std::size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const DeckAction deck(rs);
  for (int j : gamma.corner_indices)
    for (std::size_t a = 0; a < pts.size(); ++a) {
      const Vector img = deck.image(j, pts[a]);
      for (std::size_t b = 0; b < pts.size(); ++b)
        if (pts[b] == img) parent[find(a)] = find(b);
    }
  std::vector<int> label(pts.size(), -1);
  std::vector<std::size_t> roots;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    const std::size_t root = find(a);
    auto it = std::find(roots.begin(), roots.end(), root);
    if (it == roots.end()) {
      roots.push_back(root);
      label[a] = static_cast<int>(roots.size() - 1);
    } else {
      label[a] = static_cast<int>(it - roots.begin());
    }
  }
  return label;
}

}  // namespace antipodal
