#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "antipodal/catalog.hpp"
#include "antipodal/errors.hpp"
#include "antipodal/polyhedron.hpp"
#include "antipodal/quotients.hpp"
#include "antipodal/rootsys.hpp"

namespace antipodal {

/// Isotropy subsystem at the base point: positive roots vanishing on x.
inline RootSubsystem sigma_x(const RootSystem& rs, const BasePoint& base) {
  RootSubsystem sub{&rs, {}};
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    if (rs.inner(rs.positive_roots[i].vector, base.scaled_vector).is_zero()) sub.members.push_back(i);
  return sub;
}

/// Roots with c_j / d_j not a natural number.
inline std::vector<std::size_t> j_single(const RootSystem& rs, int j) {
  if (j < 1 || j > rs.rank()) throw RangeError("j_single: index " + std::to_string(j) + " out of range");
  const auto k = static_cast<std::size_t>(j - 1);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    if (rs.positive_roots[i].coefficients[k] % rs.d[k] != 0) out.push_back(i);
  return out;
}

/// Roots with c_j / d_j + c_{j+1} / d_{j+1} not in 2N.
inline std::vector<std::size_t> j_pair(const RootSystem& rs, int j) {
  if (j < 1 || j >= rs.rank()) throw RangeError("j_pair: index " + std::to_string(j) + " out of range");
  const auto k = static_cast<std::size_t>(j - 1);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
    const auto& c = rs.positive_roots[i].coefficients;
    const Rational s = Rational(c[k], rs.d[k]) + Rational(c[k + 1], rs.d[k + 1]);
    const bool in_2n = s.is_integer() && s.num() % 2 == 0;
    if (!in_2n) out.push_back(i);
  }
  return out;
}

/// Roots alpha with alpha(x/pi) not an integer.
inline std::vector<std::size_t> tangent_roots(const RootSystem& rs, const BasePoint& base) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    if (!rs.inner(rs.positive_roots[i].vector, base.scaled_vector).is_integer()) out.push_back(i);
  return out;
}

inline long orbit_dimension(const RootSystem& rs, const std::map<LengthClass, int>& mult, const BasePoint& base) {
  long dim = 0;
  for (std::size_t i : tangent_roots(rs, base)) dim += mult.at(rs.positive_roots[i].length_class);
  return dim;
}

inline long orbit_dimension(const SpaceDescriptor& space, const Params& params, const BasePoint& base) {
  check_params(space, params);
  const RootSystem rs = build(space.sigma(params));
  return orbit_dimension(rs, multiplicity_table(space, params), base);
}

struct AntipodalOrbit {
  BasePoint base;
  std::vector<std::size_t> tangent_roots;  // indices into positive_roots
  long dimension = 0;
  std::vector<std::size_t> sigma_x;
  int deck_class = 0;  // orbits sharing a class are identified by a deck transformation
};

enum class ReportStatus { PaperValidated, ExcludedUnknown, ComputedNotValidated };

inline const char* to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::PaperValidated: return "paper-validated";
    case ReportStatus::ExcludedUnknown: return "excluded-unknown";
    case ReportStatus::ComputedNotValidated: return "computed-not-validated";
  }
  return "?";
}

struct AntipodalReport {
  const SpaceDescriptor* space = nullptr;
  Params params;
  RootSystem rs;
  std::optional<GammaSubgroup> gamma;
  ReportStatus status = ReportStatus::PaperValidated;
  std::vector<AntipodalOrbit> orbits;

  [[nodiscard]] std::vector<long> dimensions() const {
    std::vector<long> d;
    for (const auto& o : orbits) d.push_back(o.dimension);
    return d;
  }

  /// One dimension per connected component of A(eK) in the space itself:
  /// orbits in the same deck class map to the same component, since deck
  /// transformations commute with K. Ordered by class label.
  [[nodiscard]] std::vector<long> component_dimensions() const {
    std::vector<long> d;
    for (const auto& o : orbits) {
      const auto k = static_cast<std::size_t>(o.deck_class);
      if (k == d.size()) d.push_back(o.dimension);
      else if (d.at(k) != o.dimension)
        throw ConstructionError("deck-identified orbits have different dimensions");
    }
    return d;
  }
};

namespace detail {

inline bool admits(const SpaceDescriptor& s, const GammaSubgroup& g) {
  if (s.excluded) return !g.supported;
  for (const auto& sym : s.gammas)
    if (sym == g.symbol && g.supported) return true;
  return false;
}

}  // namespace detail

/// Antipodal set of the space at the given parameters, one orbit per base
/// point. `gamma_label` selects the subgroup for quotient rows; it may be
/// omitted when the row admits exactly one. Excluded quotients return
/// status excluded-unknown without orbits unless `allow_unvalidated` is set
/// and a concrete subgroup was named.
inline AntipodalReport antipodal_report(const SpaceDescriptor& space, const Params& params,
                                        const std::optional<std::string>& gamma_label = std::nullopt,
                                        bool allow_unvalidated = false) {
  check_params(space, params);
  AntipodalReport rep;
  rep.space = &space;
  rep.params = params;
  rep.rs = build(space.sigma(params));
  const RootSystem& rs = rep.rs;
  const auto mult = multiplicity_table(space, params);

  std::vector<BasePoint> bases;
  if (space.simply_connected()) {
    if (gamma_label) throw AdmissibilityError(space.id + " is simply connected; no subgroup applies");
    bases = maximal_bases(cartan_polyhedron(rs));
  } else {
    GammaSubgroup g;
    if (gamma_label) {
      g = parse_gamma(rs, *gamma_label);
    } else if (space.excluded) {
      g = a_otherwise_marker();
    } else if (space.gammas.size() == 1) {
      g = parse_gamma(rs, space.gammas.front());
    } else {
      throw AdmissibilityError(space.id + " admits several subgroups; name one");
    }
    if (!detail::admits(space, g))
      throw AdmissibilityError("subgroup " + g.label + " is not admissible for " + space.id);
    rep.gamma = g;
    if (!g.supported) {
      rep.status = ReportStatus::ExcludedUnknown;
      if (!allow_unvalidated || g.corner_indices.empty()) return rep;
      rep.status = ReportStatus::ComputedNotValidated;
    }
    bases = max_prime(p_gamma(rs, g));
  }

  std::vector<Vector> pts;
  for (const auto& b : bases) pts.push_back(b.scaled_vector);
  std::vector<int> classes(bases.size());
  if (rep.gamma) classes = deck_classes(rs, *rep.gamma, pts);
  else
    for (std::size_t i = 0; i < classes.size(); ++i) classes[i] = static_cast<int>(i);

  for (std::size_t i = 0; i < bases.size(); ++i) {
    AntipodalOrbit o;
    o.base = bases[i];
    o.tangent_roots = tangent_roots(rs, o.base);
    o.sigma_x = sigma_x(rs, o.base).members;
    o.deck_class = classes[i];
    for (std::size_t k : o.tangent_roots) o.dimension += mult.at(rs.positive_roots[k].length_class);
    rep.orbits.push_back(std::move(o));
  }
  return rep;
}

/// Specialized J-set for a tagged base point; nullopt for general vertices.
inline std::optional<std::vector<std::size_t>> specialized_j_set(const RootSystem& rs, const BasePoint& base) {
  switch (base.form) {
    case BaseForm::SingleCorner: return j_single(rs, base.corner_indices.front());
    case BaseForm::HalfSum: return j_pair(rs, base.corner_indices.front());
    case BaseForm::FullSum: {
      std::vector<std::size_t> all(rs.positive_roots.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      return all;
    }
    case BaseForm::GeneralVertex: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace antipodal
