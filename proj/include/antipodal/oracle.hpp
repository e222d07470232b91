#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "antipodal/errors.hpp"
#include "antipodal/linalg.hpp"
#include "antipodal/polyhedron.hpp"
#include "antipodal/rootsys.hpp"

// Brute-force cross-checks for the test suite and `verify --deep`. Nothing
// here calls into the primary enumeration paths.

namespace antipodal::oracle {

struct Mismatch {
  std::string item;
  bool in_primary = false;
  bool in_oracle = false;
};

struct OracleReport {
  std::string subject;
  bool agreed = true;
  std::vector<Mismatch> mismatches;

  void add(Mismatch m) {
    mismatches.push_back(std::move(m));
    agreed = false;
  }
};

namespace detail {

using Coeffs = std::vector<int>;

/// Cartan integers 2(a_i, a_j)/(a_j, a_j) from the simple root vectors.
inline std::vector<std::vector<int>> cartan_matrix(const std::vector<Vector>& simple) {
  const std::size_t r = simple.size();
  std::vector<std::vector<int>> a(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Rational v = Rational(2) * inner(simple[i], simple[j]) / inner(simple[j], simple[j]);
      if (!v.is_integer()) throw ConstructionError("oracle: simple roots are not crystallographic");
      a[i][j] = static_cast<int>(v.num());
    }
  return a;
}

}  // namespace detail

/// Positive roots generated independently: close the simple roots under
/// simple reflections in coefficient space (adding 2b for the shortest
/// roots of bc_r), then accept exactly the non-negative coefficient vectors
/// in the box 0 <= c_k <= d_k + 1 that the closure contains.
inline std::vector<Vector> enumerate_roots_oracle(const RootSystemId& id) {
  const RootSystem ref = build(id);
  std::vector<Vector> simple;
  for (const auto& a : ref.simple_roots) simple.push_back(a.vector);
  const std::size_t r = simple.size();
  if (r > 12) throw UnsupportedInputError("oracle: rank above 12");
  const auto cartan = detail::cartan_matrix(simple);

  std::set<detail::Coeffs> closure;
  std::vector<detail::Coeffs> frontier;
  for (std::size_t i = 0; i < r; ++i) {
    detail::Coeffs c(r, 0);
    c[i] = 1;
    closure.insert(c);
    frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<detail::Coeffs> next;
    for (const auto& c : frontier)
      for (std::size_t i = 0; i < r; ++i) {
        // <beta, alpha_i^vee> = sum_k c_k A_{k i}
        int pairing = 0;
        for (std::size_t k = 0; k < r; ++k) pairing += c[k] * cartan[k][i];
        if (pairing == 0) continue;
        detail::Coeffs s = c;
        s[i] -= pairing;
        if (closure.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }

  const auto gram_m = gram(simple);
  auto norm = [&](const detail::Coeffs& c) {
    Rational n;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) n += Rational(c[i] * c[j]) * gram_m[i][j];
    return n;
  };
  if (id.family == Family::BC) {
    Rational shortest = norm(*closure.begin());
    for (const auto& c : closure) shortest = std::min(shortest, norm(c));
    std::vector<detail::Coeffs> doubled;
    for (const auto& c : closure)
      if (norm(c) == shortest) {
        detail::Coeffs d2 = c;
        for (int& x : d2) x *= 2;
        doubled.push_back(d2);
      }
    closure.insert(doubled.begin(), doubled.end());
  }

  // Pack non-negative members for the box scan: 5 bits per coefficient.
  auto pack = [](const detail::Coeffs& c) {
    std::uint64_t key = 0;
    for (int x : c) key = (key << 5) | static_cast<std::uint64_t>(x);
    return key;
  };
  std::unordered_set<std::uint64_t> members;
  for (const auto& c : closure)
    if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0 && x < 32; })) members.insert(pack(c));

  std::vector<int> bound(r);
  for (std::size_t k = 0; k < r; ++k) bound[k] = std::min(ref.d[k] + 1, 31);
  std::vector<Vector> out;
  detail::Coeffs c(r, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < r && c[k] == bound[k]) c[k++] = 0;
    if (k == r) break;
    ++c[k];
    if (!members.count(pack(c))) continue;
    Vector v = zeros(ref.ambient_dim);
    for (std::size_t i = 0; i < r; ++i) axpy(v, Rational(c[i]), simple[i]);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Compares the oracle's root set with the primary build.
inline OracleReport compare_roots(const RootSystemId& id) {
  OracleReport rep;
  rep.subject = "roots " + to_string(id);
  std::set<Vector> primary;
  for (const auto& a : build(id).positive_roots) primary.insert(a.vector);
  const auto found = enumerate_roots_oracle(id);
  const std::set<Vector> oracle(found.begin(), found.end());
  for (const auto& v : primary)
    if (!oracle.count(v)) rep.add({to_string(v), true, false});
  for (const auto& v : oracle)
    if (!primary.count(v)) rep.add({to_string(v), false, true});
  if (primary.size() != expected_positive_count(id))
    rep.add({"count " + std::to_string(primary.size()) + " vs " + std::to_string(expected_positive_count(id)), true, false});
  return rep;
}

inline bool feasible(const PGammaPolytope& poly, const Vector& x) {
  for (const auto& h : poly.half_spaces)
    if (poly.rs.inner(h.normal, x) > h.bound) return false;
  return true;
}

/// Sampling check of an enumerated polytope:
///   * convex combinations of vertices with weights k/grid_density are feasible;
///   * boundary points hit by rays from the origin through the chamber
///     never exceed the claimed maximal norm on the outer boundary.
inline OracleReport vertex_check_oracle(const PGammaPolytope& poly, int grid_density, std::uint32_t seed = 7,
                                        int samples = 200) {
  OracleReport rep;
  rep.subject = "vertices " + to_string(poly.rs.id) + (poly.gamma.label.empty() ? "" : " / " + poly.gamma.label);
  if (grid_density < 1) throw PreconditionError("vertex_check_oracle: grid density must be positive");
  std::mt19937 rng(seed);
  const auto& v = poly.vertices;

  Rational best;
  bool any = false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (poly.on_prime[i]) {
      if (!any || poly.squared_norms[i] > best) best = poly.squared_norms[i];
      any = true;
    }

  for (std::size_t i = 0; i < v.size(); ++i)
    if (!feasible(poly, v[i])) rep.add({"vertex " + to_string(v[i]) + " infeasible", true, false});

  std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
  std::uniform_int_distribution<int> weight(0, grid_density);
  for (int s = 0; s < samples; ++s) {
    const std::size_t a = pick(rng), b = pick(rng);
    const int k = weight(rng);
    Vector x = Rational(k, grid_density) * v[a];
    axpy(x, Rational(grid_density - k, grid_density), v[b]);
    if (!feasible(poly, x)) rep.add({"combination " + to_string(x) + " infeasible", false, true});
  }

  // Ray directions u = sum y_i e_i with small non-negative integer weights.
  const std::size_t r = poly.corners.size();
  auto probe = [&](const std::vector<int>& y) {
    Vector u = zeros(poly.rs.ambient_dim);
    for (std::size_t i = 0; i < r; ++i) axpy(u, Rational(y[i]), poly.corners[i]);
    if (is_zero(u)) return;
    std::optional<Rational> t;
    for (const auto& h : poly.half_spaces) {
      const Rational nu = poly.rs.inner(h.normal, u);
      if (nu.sign() <= 0) continue;
      const Rational ti = h.bound / nu;
      if (!t || ti < *t) t = ti;
    }
    if (!t) {
      rep.add({"unbounded ray " + to_string(u), false, true});
      return;
    }
    const Vector x = *t * u;
    if (any && poly.rs.norm2(x) > best) rep.add({"boundary point " + to_string(x) + " beats maximum", false, true});
  };
  std::vector<int> y(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    y.assign(r, 0);
    y[i] = 1;
    probe(y);
    for (std::size_t j = i + 1; j < r; ++j) {
      y[j] = 1;
      probe(y);
      y[j] = 0;
    }
  }
  for (int s = 0; s < samples; ++s) {
    for (auto& w : y) w = weight(rng);
    probe(y);
  }
  return rep;
}

/// Exhaustive vertex enumeration over all rank-subsets of constraints.
/// Exponential; intended for cross-checking at small sizes.
inline std::vector<Vector> vertex_enumerate_bruteforce(const std::vector<HalfSpace>& hs, std::size_t rank,
                                                       const Rational& scale = 1) {
  std::set<Vector> found;
  std::vector<std::size_t> idx(rank);
  for (std::size_t i = 0; i < rank; ++i) idx[i] = i;
  const std::size_t n = hs.size();
  if (n < rank) return {};
  for (;;) {
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t i : idx) {
      rows.push_back(hs[i].normal);
      rhs.push_back(hs[i].bound / scale);
    }
    try {
      const Vector x = solve_linear(rows, rhs);
      bool ok = true;
      for (const auto& h : hs)
        if (scale * inner(h.normal, x) > h.bound) {
          ok = false;
          break;
        }
      if (ok) found.insert(x);
    } catch (const SingularSystemError&) {
    }
    std::size_t k = rank;
    while (k > 0 && idx[k - 1] == n - rank + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < rank; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace antipodal::oracle
