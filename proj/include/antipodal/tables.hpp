#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "antipodal/antipodal.hpp"
#include "antipodal/catalog.hpp"
#include "antipodal/errors.hpp"
#include "antipodal/formula.hpp"
#include "antipodal/polyhedron.hpp"
#include "antipodal/quotients.hpp"
#include "antipodal/rootsys.hpp"

// Tables 1-6 generated from the engine. Row layouts (which root system,
// which rank condition, which subgroup) are structural; every value cell is
// computed at run time and symbolized by fitting over sampled ranks.

namespace antipodal::tables {

/// Rank condition of a table row: rank = mul * r + add for admissible r.
struct Domain {
  Family family = Family::A;
  int mul = 1;
  int add = 0;
  ParamRange r;
  int mod4 = -1;  // if >= 0, r must be congruent to this mod 4

  [[nodiscard]] bool fixed() const { return is_exceptional(family) || mul == 0; }

  [[nodiscard]] bool contains(int v) const {
    if (fixed()) return true;
    return r.contains(v) && (mod4 < 0 || v % 4 == mod4);
  }

  [[nodiscard]] RootSystemId id(int v) const {
    if (is_exceptional(family)) return {family, exceptional_rank(family)};
    return {family, mul * v + add};
  }

  /// Admissible r with 1 <= rank <= max_rank; {0} for fixed rows.
  [[nodiscard]] std::vector<int> sample(int max_rank) const {
    if (fixed()) return {0};
    std::vector<int> out;
    for (int v = 1; mul * v + add <= max_rank; ++v)
      if (mul * v + add >= 1 && contains(v)) out.push_back(v);
    return out;
  }

  /// "a_{2r}", "b_4", "e6"; concrete when v is given.
  [[nodiscard]] std::string sigma(std::optional<int> v = std::nullopt) const {
    if (is_exceptional(family)) return family_name(family);
    std::string idx;
    if (v) idx = std::to_string(mul * *v + add);
    else if (r.only.size() == 1) idx = std::to_string(mul * r.only.front() + add);
    else if (!r.only.empty()) {
      std::string s;
      for (std::size_t i = 0; i < r.only.size(); ++i)
        s += (i ? ", " : "") + std::string(family_name(family)) + "_" + std::to_string(mul * r.only[i] + add);
      return s;
    } else idx = render_affine({Rational(mul), Rational(add)});
    return std::string(family_name(family)) + "_" + (idx.size() == 1 ? idx : "{" + idx + "}");
  }
};

struct Table1Row {
  Domain dom;
  std::string condition;
  [[nodiscard]] std::string key() const { return dom.sigma() + (condition.empty() ? "" : " " + condition); }
};

struct Table2Row {
  Domain dom;
  std::string condition;
  std::string gamma;  // subgroup symbol; "otherwise" for the unknown a_r row
  [[nodiscard]] std::string key() const {
    return dom.sigma() + (condition.empty() ? "" : " " + condition) + " | " + gamma;
  }
};

namespace detail {

inline ParamRange range(int min, int parity = 0) { return {min, 0, parity, {}}; }
inline ParamRange only(std::vector<int> v) { return {1, 0, 0, std::move(v)}; }
inline Domain fixed(Family f) { return {f, 0, exceptional_rank(f), {}, -1}; }

}  // namespace detail

inline const std::vector<Table1Row>& table1_rows() {
  using detail::only;
  using detail::range;
  static const std::vector<Table1Row> rows = {
      {{Family::A, 2, 0, range(1)}, ""},
      {{Family::A, 2, -1, range(1)}, ""},
      {{Family::B, 1, 0, only({2, 3})}, ""},
      {{Family::B, 1, 0, only({4})}, ""},
      {{Family::B, 1, 0, range(5)}, "(r>4)"},
      {{Family::C, 1, 0, range(2)}, ""},
      {{Family::D, 1, 0, only({4})}, ""},
      {{Family::D, 1, 0, range(5)}, "(r>4)"},
      {detail::fixed(Family::E6), ""},
      {detail::fixed(Family::E7), ""},
      {detail::fixed(Family::E8), ""},
      {detail::fixed(Family::F4), ""},
      {detail::fixed(Family::G2), ""},
      {{Family::BC, 1, 0, range(1)}, ""},
  };
  return rows;
}

inline const std::vector<Table2Row>& table2_rows() {
  using detail::only;
  using detail::range;
  const std::string pm1 = "{e,p_{r-1}}", pr = "{e,p_r}";
  static const std::vector<Table2Row> rows = {
      {{Family::A, 1, 0, range(3, 1), 3}, "(r>=3 odd, (r+1)/2 even)", "Z_2"},
      {{Family::A, 1, 0, range(3, 1), 1}, "(r>=3 odd, (r+1)/2 odd)", "Z_2"},
      {{Family::A, 1, 0, range(1)}, "", "Z_{r+1}"},
      {{Family::A, 1, 0, range(3)}, "", "otherwise"},
      {{Family::B, 1, 0, range(2)}, "", "Z_2"},
      {{Family::C, 1, 0, range(2, 2)}, "(r even)", "Z_2"},
      {{Family::C, 1, 0, range(3, 1)}, "(r odd)", "Z_2"},
      {{Family::D, 1, 0, range(4, 2)}, "(r even)", "Z_2+Z_2"},
      {{Family::D, 1, 0, range(5, 1)}, "(r odd)", "Z_4"},
      {{Family::D, 1, 0, range(4)}, "", "{e,p_1}"},
      {{Family::D, 1, 0, only({4, 6})}, "(r even, r<=6)", pm1},
      {{Family::D, 1, 0, only({8})}, "", pm1},
      {{Family::D, 1, 0, range(10, 2)}, "(r even, r>=10)", pm1},
      {{Family::D, 1, 0, only({4, 6})}, "(r even, r<=6)", pr},
      {{Family::D, 1, 0, only({8})}, "", pr},
      {{Family::D, 1, 0, range(10, 2)}, "(r even, r>=10)", pr},
      {detail::fixed(Family::E6), "", "Z_3"},
      {detail::fixed(Family::E7), "", "Z_2"},
  };
  return rows;
}

/// A cell value at one parameter point: a sequence of tagged integer tuples
/// ("e" {j}, "half" {i, j}, "dim" {n}, ...). Tuples of equal shape across
/// samples are fitted slot by slot.
struct Item {
  std::string tag;
  std::vector<long> ints;
  friend bool operator==(const Item&, const Item&) = default;
};
using CellValue = std::vector<Item>;

/// Formats one item; `slot` yields each integer as text (a number or a
/// fitted expression).
using ItemFormatter = std::function<std::string(const Item&, const std::vector<std::string>&)>;

namespace detail {

inline std::string sub(const std::string& s) { return s.size() == 1 ? s : "{" + s + "}"; }

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

inline std::string format_concrete(const CellValue& cell, const ItemFormatter& fmt) {
  std::vector<std::string> parts;
  for (const auto& it : cell) {
    std::vector<std::string> slots;
    for (long x : it.ints) slots.push_back(std::to_string(x));
    parts.push_back(fmt(it, slots));
  }
  return join(parts, "; ");
}

inline bool same_shape(const CellValue& a, const CellValue& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].tag != b[i].tag || a[i].ints.size() != b[i].ints.size()) return false;
  return true;
}

/// Fits every integer slot affinely in r; nullopt if shapes or fits differ.
inline std::optional<std::string> format_fitted(const std::vector<std::pair<int, CellValue>>& samples,
                                                const ItemFormatter& fmt) {
  if (samples.empty()) return std::nullopt;
  const CellValue& first = samples.front().second;
  for (const auto& [v, c] : samples)
    if (!same_shape(first, c)) return std::nullopt;
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < first.size(); ++i) {
    std::vector<std::string> slots;
    for (std::size_t k = 0; k < first[i].ints.size(); ++k) {
      std::vector<std::pair<Rational::int_type, Rational>> pts;
      for (const auto& [v, c] : samples) pts.emplace_back(v, Rational(c[i].ints[k]));
      const auto f = fit_affine(pts);
      if (!f) return std::nullopt;
      slots.push_back(render_affine(*f));
    }
    parts.push_back(fmt(first[i], slots));
  }
  return join(parts, "; ");
}

/// Symbolic rendering with a parity split and a per-value listing as
/// fallbacks.
inline std::string format_symbolic(const std::vector<std::pair<int, CellValue>>& samples, const ItemFormatter& fmt) {
  if (auto s = format_fitted(samples, fmt)) return *s;
  std::vector<std::pair<int, CellValue>> even, odd;
  for (const auto& s : samples) (s.first % 2 == 0 ? even : odd).push_back(s);
  auto e = format_fitted(even, fmt), o = format_fitted(odd, fmt);
  if (e && o) return *e + " (r even) / " + *o + " (r odd)";
  std::vector<std::string> parts;
  for (const auto& [v, c] : samples) parts.push_back("r=" + std::to_string(v) + ": " + format_concrete(c, fmt));
  return join(parts, " / ");
}

}  // namespace detail

// Item formatters.

inline std::string fmt_corner(const Item&, const std::vector<std::string>& s) { return "e_" + detail::sub(s.at(0)); }

inline std::string fmt_factor(const Item&, const std::vector<std::string>& s) {
  return "d_" + detail::sub(s.at(0)) + "=" + s.at(1);
}

/// Base points: "e_j", "1/2(e_i+e_j)", "1/(n+1)(e_1+...+e_n)", or coordinates.
inline std::string fmt_point(const Item& it, const std::vector<std::string>& s) {
  if (it.tag == "single") return "e_" + detail::sub(s.at(0));
  if (it.tag == "half") return "1/2(e_" + detail::sub(s.at(0)) + "+e_" + detail::sub(s.at(1)) + ")";
  if (it.tag == "full") {
    const auto n = s.at(0);
    const bool atom = n.find_first_of("+-") == std::string::npos;
    const std::string plus1 = atom && std::all_of(n.begin(), n.end(), ::isdigit) ? std::to_string(std::stol(n) + 1)
                                                                                  : "(" + n + "+1)";
    return "1/" + plus1 + "(e_1+...+e_" + detail::sub(n) + ")";
  }
  return it.tag;  // general vertex: tag carries the coordinates
}

/// Highest-root factors for a base point: "2", "(2,2)", "(1,...,1)", "-".
inline std::string fmt_point_factor(const Item& it, const std::vector<std::string>& s) {
  if (it.tag == "single") return s.at(0);
  if (it.tag == "half") return "(" + s.at(0) + "," + s.at(1) + ")";
  if (it.tag == "full") return "(1,...,1)";
  return "-";
}

inline std::string fmt_number(const Item&, const std::vector<std::string>& s) { return s.at(0); }

// Engine values per row.

struct Table1Value {
  CellValue corners;
  CellValue factors;
};

inline Table1Value table1_value(const RootSystem& rs) {
  Table1Value v;
  for (int j : maximal_corners(cartan_polyhedron(rs))) {
    v.corners.push_back({"e", {j}});
    v.factors.push_back({"d", {j, rs.d.at(static_cast<std::size_t>(j - 1))}});
  }
  return v;
}

inline Table1Value table1_value(const Table1Row& row, int v) { return table1_value(build(row.dom.id(v))); }

struct Table2Value {
  bool unknown = false;
  CellValue points;
  CellValue factors;
};

inline Item point_item(const RootSystem& rs, const BasePoint& b) {
  Item it;
  switch (b.form) {
    case BaseForm::SingleCorner: it = {"single", {b.corner_indices.at(0)}}; break;
    case BaseForm::HalfSum: it = {"half", {b.corner_indices.at(0), b.corner_indices.at(1)}}; break;
    case BaseForm::FullSum: it = {"full", {rs.rank()}}; break;
    case BaseForm::GeneralVertex: {
      std::vector<std::string> c;
      for (const auto& x : b.scaled_vector) c.push_back(x.str());
      it = {"[" + detail::join(c, ",") + "]", {}};
      break;
    }
  }
  return it;
}

inline Item point_factor_item(const RootSystem& rs, const BasePoint& b) {
  Item it = point_item(rs, b);
  it.ints.clear();
  for (int j : b.corner_indices)
    if (b.form != BaseForm::FullSum) it.ints.push_back(rs.d.at(static_cast<std::size_t>(j - 1)));
  return it;
}

inline Table2Value table2_value(const RootSystem& rs, const std::vector<BasePoint>& bases) {
  Table2Value v;
  for (const auto& b : bases) {
    v.points.push_back(point_item(rs, b));
    v.factors.push_back(point_factor_item(rs, b));
  }
  return v;
}

inline Table2Value table2_value(const Table2Row& row, int v) {
  if (row.gamma == "otherwise") return {true, {}, {}};
  const RootSystem rs = build(row.dom.id(v));
  return table2_value(rs, max_prime(p_gamma(rs, parse_gamma(rs, row.gamma))));
}

/// Parameter grid for a catalog row: admissible r <= r_max, q in 1..q_max.
inline std::vector<Params> param_grid(const SpaceDescriptor& s, int r_max = 10, int q_max = 5) {
  std::vector<int> rs = s.has_r ? s.r.values_up_to(r_max) : std::vector<int>{0};
  std::vector<int> qs;
  if (s.has_q)
    for (int q = 1; q <= q_max; ++q) qs.push_back(q);
  else
    qs.push_back(0);
  std::vector<Params> out;
  for (int r : rs)
    for (int q : qs) out.push_back({r, q});
  return out;
}

/// Component dimensions of a catalog row for each subgroup symbol it lists
/// (one entry for simply connected rows); nullopt for excluded rows.
inline std::optional<std::vector<std::vector<long>>> row_dimensions(const SpaceDescriptor& s, const Params& p) {
  if (s.excluded) return std::nullopt;
  std::vector<std::vector<long>> out;
  if (s.simply_connected()) {
    out.push_back(antipodal_report(s, p).component_dimensions());
  } else {
    for (const auto& g : s.gammas) out.push_back(antipodal_report(s, p, g).component_dimensions());
  }
  return out;
}

// Rendering.

struct Table {
  int number = 0;
  std::string caption;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  int sigma_column = -1;
};

namespace detail {

/// Admissible r for symbolic fits: up to 10, extended to 14 so that rows
/// starting late still get three samples.
inline std::vector<int> symbolic_r(const SpaceDescriptor& s) {
  if (!s.has_r) return {0};
  std::vector<int> v = s.r.values_up_to(10);
  for (int hi = 11; v.size() < 3 && hi <= 14; ++hi) v = s.r.values_up_to(hi);
  return v;
}

inline std::string dims_cell(const SpaceDescriptor& s, const std::optional<Params>& at) {
  if (s.excluded) return "unknown";
  auto dims_at = [&](const Params& p) {
    // Half-spin rows list two subgroups; they must agree.
    const auto all = *row_dimensions(s, p);
    for (const auto& d : all)
      if (d != all.front()) return std::optional<std::vector<long>>{};
    return std::optional<std::vector<long>>{all.front()};
  };
  if (at) {
    const auto d = dims_at(*at);
    if (!d) return "subgroups disagree";
    std::vector<std::string> parts;
    for (long x : *d) parts.push_back(std::to_string(x));
    return join(parts, "; ");
  }
  std::vector<std::pair<Params, std::vector<long>>> values;
  for (int r : symbolic_r(s))
    for (int q = s.has_q ? 1 : 0; q <= (s.has_q ? 5 : 0); ++q) {
    const Params p{r, q};
    const auto d = dims_at(p);
    if (!d) return "subgroups disagree";
    values.emplace_back(p, *d);
    }
  auto fit = [&](const std::vector<std::pair<Params, std::vector<long>>>& vals) -> std::optional<std::string> {
    if (vals.empty()) return std::nullopt;
    for (const auto& v : vals)
      if (v.second.size() != vals.front().second.size()) return std::nullopt;
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < vals.front().second.size(); ++k) {
      std::vector<Sample> samples;
      for (const auto& [p, d] : vals) samples.push_back({p.r, p.q, Rational(d[k])});
      const auto poly = fit_polynomial(samples);
      if (!poly) return std::nullopt;
      parts.push_back(render_polynomial(*poly));
    }
    return join(parts, "; ");
  };
  if (auto f = fit(values)) return *f;
  std::vector<std::pair<Params, std::vector<long>>> even, odd;
  for (const auto& v : values) (v.first.r % 2 == 0 ? even : odd).push_back(v);
  auto e = fit(even), o = fit(odd);
  if (e && o) return *e + " (r even) / " + *o + " (r odd)";
  return "irregular";
}

inline std::string corners_cell(const SpaceDescriptor& s, const std::optional<Params>& at) {
  auto value = [&](const Params& p) { return table1_value(build(s.sigma(p))).corners; };
  if (at) return format_concrete(value(*at), fmt_corner);
  std::vector<std::pair<int, CellValue>> samples;
  for (int r : symbolic_r(s)) samples.emplace_back(r, value({r, 1}));
  return format_symbolic(samples, fmt_corner);
}

/// Subgroup symbols, resolved to concrete labels when the rank is known.
inline std::string gamma_cell(const SpaceDescriptor& s, const std::optional<Params>& at) {
  if (s.excluded || (s.has_r && !at)) return join(s.gammas, " or ");
  const RootSystem rs = build(s.sigma(at.value_or(Params{})));
  std::vector<std::string> labels;
  for (const auto& g : s.gammas) labels.push_back(parse_gamma(rs, g).label);
  return join(labels, " or ");
}

inline std::string space_cell(const SpaceDescriptor& s) {
  if (!s.has_r || s.r.only.size() == 1) return s.name;
  return s.name + " (" + s.range_label() + ")";
}

}  // namespace detail

/// Builds table n (1..6). With `at`, rows are restricted to those admitting
/// the parameters and cells hold numbers; otherwise cells are symbolic.
inline Table make_table(int n, const std::optional<Params>& at = std::nullopt) {
  Table t;
  t.number = n;
  const int max_rank = 12;
  switch (n) {
    case 1: {
      t.caption = "Table 1. Maximal corners of the Cartan polyhedron and highest-root factors";
      t.columns = {"Sigma", "max(Delta')", "Factors d_j"};
      t.sigma_column = 0;
      for (const auto& row : table1_rows()) {
        if (at && !row.dom.contains(at->r)) continue;
        if (at) {
          const auto v = table1_value(row, at->r);
          t.rows.push_back({row.dom.sigma(row.dom.fixed() ? std::nullopt : std::optional<int>(at->r)),
                            detail::format_concrete(v.corners, fmt_corner),
                            detail::format_concrete(v.factors, fmt_factor)});
          continue;
        }
        std::vector<std::pair<int, CellValue>> c, f;
        for (int v : row.dom.sample(max_rank)) {
          const auto val = table1_value(row, v);
          c.emplace_back(v, val.corners);
          f.emplace_back(v, val.factors);
        }
        t.rows.push_back({row.key(), detail::format_symbolic(c, fmt_corner), detail::format_symbolic(f, fmt_factor)});
      }
      break;
    }
    case 2: {
      t.caption = "Table 2. Maximal points of P_Gamma' for the quotients M/Gamma and highest-root factors";
      t.columns = {"Sigma", "Gamma", "max(P_Gamma')", "Factors of psi"};
      t.sigma_column = 0;
      for (const auto& row : table2_rows()) {
        if (at && !row.dom.contains(at->r)) continue;
        if (row.gamma == "otherwise") {
          t.rows.push_back({at ? row.dom.sigma(at->r) : row.key().substr(0, row.key().find(" | ")), row.gamma, "unknown", ""});
          continue;
        }
        if (at) {
          const auto v = table2_value(row, at->r);
          t.rows.push_back({row.dom.sigma(row.dom.fixed() ? std::nullopt : std::optional<int>(at->r)), row.gamma,
                            detail::format_concrete(v.points, fmt_point),
                            detail::format_concrete(v.factors, fmt_point_factor)});
          continue;
        }
        std::vector<std::pair<int, CellValue>> pts, fac;
        for (int v : row.dom.sample(max_rank)) {
          const auto val = table2_value(row, v);
          pts.emplace_back(v, val.points);
          fac.emplace_back(v, val.factors);
        }
        const std::string label = row.dom.sigma() + (row.condition.empty() ? "" : " " + row.condition);
        t.rows.push_back({label, row.gamma, detail::format_symbolic(pts, fmt_point),
                          detail::format_symbolic(fac, fmt_point_factor)});
      }
      break;
    }
    case 3:
    case 5:
    case 4:
    case 6: {
      const bool quotient = n == 4 || n == 6;
      const bool type_ii = n >= 5;
      t.caption = "Table " + std::to_string(n) + ". Dimensions of the antipodal-set components, " +
                  (quotient ? "non-simply connected" : "simply connected") + " spaces of type " +
                  (type_ii ? "II" : "I");
      if (!type_ii) t.columns = {"Type", quotient ? "M~ or (g,k)" : "M or (g,k)", "Sigma"};
      else t.columns = {quotient ? "G~" : "G", "Sigma"};
      t.columns.push_back(quotient ? "Gamma" : "max(Delta')");
      t.columns.push_back("dim A");
      t.sigma_column = type_ii ? 1 : 2;
      for (const auto& s : spaces()) {
        if (s.table != n) continue;
        if (at && s.has_r && !s.r.contains(at->r)) continue;
        std::optional<Params> p;
        if (at) p = Params{at->r, s.has_q ? std::max(at->q, 1) : 0};
        std::vector<std::string> cells;
        if (!type_ii) cells.push_back(s.cartan_label);
        cells.push_back(detail::space_cell(s));
        cells.push_back(p && s.has_r ? std::string(family_name(s.family)) + "_" + std::to_string(s.sigma(*p).rank)
                                     : s.sigma_label());
        cells.push_back(quotient ? detail::gamma_cell(s, p) : detail::corners_cell(s, p));
        cells.push_back(detail::dims_cell(s, p));
        t.rows.push_back(std::move(cells));
      }
      break;
    }
    default: throw RangeError("table number must be between 1 and 6");
  }
  return t;
}

// Unicode decoration of ASCII cells.

namespace detail {

inline void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (std::size_t p = 0; (p = s.find(from, p)) != std::string::npos; p += to.size()) s.replace(p, from.size(), to);
}

inline std::string fraktur(char c) {
  switch (c) {
    case 'a': return "\U0001D51E";
    case 'b': return "\U0001D51F";
    case 'c': return "\U0001D520";
    case 'd': return "\U0001D521";
    case 'e': return "\U0001D522";
    case 'f': return "\U0001D523";
    case 'g': return "\U0001D524";
    default: return std::string(1, c);
  }
}

inline std::string subscript_digit(char c) {
  static const char* const digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  return digits[c - '0'];
}

/// "bc_r" -> fraktur bc with subscript r; "e6" -> fraktur e with subscript 6.
inline std::string sigma_unicode(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool word_start = i == 0 || !std::isalnum(static_cast<unsigned char>(s[i - 1]));
    if (word_start && s[i] >= 'a' && s[i] <= 'g') {
      std::size_t j = i;
      while (j < s.size() && s[j] >= 'a' && s[j] <= 'g') ++j;
      if (j < s.size() && (s[j] == '_' || std::isdigit(static_cast<unsigned char>(s[j])))) {
        for (std::size_t k = i; k < j; ++k) out += fraktur(s[k]);
        if (std::isdigit(static_cast<unsigned char>(s[j]))) {
          for (; j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])); ++j) out += subscript_digit(s[j]);
        }
        i = j - 1;
        continue;
      }
    }
    out += s[i];
  }
  return out;
}

inline std::string unicode(std::string s) {
  replace_all(s, "1/2(", "½(");
  replace_all(s, "...", "…");
  replace_all(s, ">=", "≥");
  replace_all(s, "<=", "≤");
  replace_all(s, "Z_2+Z_2", "ℤ₂⊕ℤ₂");
  replace_all(s, "Z_{r+1}", "ℤ_{r+1}");
  replace_all(s, "Z_2", "ℤ₂");
  replace_all(s, "Z_3", "ℤ₃");
  replace_all(s, "Z_4", "ℤ₄");
  replace_all(s, "r^2", "r²");
  replace_all(s, "P_Gamma'", "P_Γ′");
  replace_all(s, "Delta'", "Δ′");
  replace_all(s, "Sigma", "Σ");
  replace_all(s, "Gamma", "Γ");
  replace_all(s, "psi", "ψ");
  replace_all(s, "M~", "M̃");
  replace_all(s, "G~", "G̃");
  // Plain subscripts: "_12" and a lone "_r".
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '_' && i + 1 < s.size()) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      const bool alnum_after = j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]));
      if (j > i + 1 && !alnum_after) {
        for (std::size_t k = i + 1; k < j; ++k) out += subscript_digit(s[k]);
        i = j - 1;
        continue;
      }
      const bool lone_r = s[i + 1] == 'r' && (i + 2 == s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 2])));
      if (lone_r) {
        out += "ᵣ";
        ++i;
        continue;
      }
    }
    out += s[i];
  }
  return out;
}

/// Display width: UTF-8 code points, combining marks excluded.
inline std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if ((c & 0xC0) == 0x80) continue;
    if (c == 0xCC && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) >= 0x80 &&
        static_cast<unsigned char>(s[i + 1]) <= 0xBF)
      continue;  // U+0300..U+033F combining marks
    ++w;
  }
  return w;
}

}  // namespace detail

/// Applies Unicode math notation to a copy of the table.
inline Table decorate(Table t) {
  t.caption = detail::unicode(t.caption);
  for (auto& c : t.columns) c = detail::unicode(c);
  for (auto& row : t.rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (static_cast<int>(i) == t.sigma_column) row[i] = detail::sigma_unicode(row[i]);
      row[i] = detail::unicode(row[i]);
    }
  return t;
}

inline std::string render_text(const Table& raw, bool ascii = false) {
  const Table t = ascii ? raw : decorate(raw);
  std::vector<std::size_t> w(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) w[i] = detail::width(t.columns[i]);
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], detail::width(row[i]));
  std::ostringstream out;
  out << t.caption << "\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? " | " : "") << cells[i];
      if (i + 1 < cells.size()) out << std::string(w[i] - detail::width(cells[i]), ' ');
    }
    out << "\n";
  };
  line(t.columns);
  std::size_t total = 0;
  for (std::size_t x : w) total += x;
  out << std::string(total + 3 * (w.size() - 1), '-') << "\n";
  for (const auto& row : t.rows) line(row);
  return out.str();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string render_csv(const Table& t) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
    out << "\n";
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  return out.str();
}

}  // namespace antipodal::tables
