#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "antipodal/errors.hpp"
#include "antipodal/linalg.hpp"
#include "antipodal/rational.hpp"

namespace antipodal {

enum class Family { A, B, C, D, BC, E6, E7, E8, F4, G2 };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::C: return "c";
    case Family::D: return "d";
    case Family::BC: return "bc";
    case Family::E6: return "e6";
    case Family::E7: return "e7";
    case Family::E8: return "e8";
    case Family::F4: return "f4";
    case Family::G2: return "g2";
  }
  return "?";
}

inline bool is_exceptional(Family f) {
  return f == Family::E6 || f == Family::E7 || f == Family::E8 || f == Family::F4 || f == Family::G2;
}

inline int exceptional_rank(Family f) {
  switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return 0;
  }
}

struct RootSystemId {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const RootSystemId&, const RootSystemId&) = default;
  friend auto operator<=>(const RootSystemId&, const RootSystemId&) = default;
};

/// ASCII label such as "a3", "bc2", "e8".
inline std::string to_string(const RootSystemId& id) {
  if (is_exceptional(id.family)) return family_name(id.family);
  return std::string(family_name(id.family)) + std::to_string(id.rank);
}

enum class LengthClass { Short, Medium, Long };

inline const char* to_string(LengthClass c) {
  switch (c) {
    case LengthClass::Short: return "short";
    case LengthClass::Medium: return "medium";
    case LengthClass::Long: return "long";
  }
  return "?";
}

struct Root {
  Vector vector;
  std::vector<int> coefficients;  // c_1..c_r with vector = sum c_k alpha_k
  LengthClass length_class = LengthClass::Long;
};

struct RootSystem {
  RootSystemId id;
  std::size_t ambient_dim = 0;
  std::vector<Root> simple_roots;
  std::vector<Root> positive_roots;  // sorted by (height, coefficients)
  Root highest_root;
  std::vector<int> d;                // coefficients of the highest root
  Rational metric_scale = 1;         // every inner product is multiplied by this

  [[nodiscard]] int rank() const { return id.rank; }

  [[nodiscard]] Rational inner(const Vector& u, const Vector& v) const {
    return metric_scale * antipodal::inner(u, v);
  }
  [[nodiscard]] Rational norm2(const Vector& v) const { return inner(v, v); }

  [[nodiscard]] std::vector<Vector> simple_vectors() const {
    std::vector<Vector> out;
    out.reserve(simple_roots.size());
    for (const auto& a : simple_roots) out.push_back(a.vector);
    return out;
  }

  /// Index into positive_roots of the root with this vector, or -1.
  [[nodiscard]] int find_positive(const Vector& v) const {
    for (std::size_t i = 0; i < positive_roots.size(); ++i)
      if (positive_roots[i].vector == v) return static_cast<int>(i);
    return -1;
  }
};

/// Expansion of v in the simple roots. Throws SpanError if v is outside
/// their span.
inline std::vector<Rational> coefficients(const RootSystem& rs, const Vector& v) {
  const auto rows = rs.simple_vectors();
  if (v.size() != rs.ambient_dim) throw DimensionError("coefficients: wrong ambient dimension");
  Vector rhs(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rhs[i] = inner(rows[i], v);
  const Vector c = solve_square(gram(rows), rhs);
  Vector back = zeros(rs.ambient_dim);
  for (std::size_t k = 0; k < rows.size(); ++k) axpy(back, c[k], rows[k]);
  if (back != v) throw SpanError("vector " + to_string(v) + " is not in the span of the simple roots");
  return c;
}

namespace detail {

inline Vector vec_from_ints(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

/// x_i +/- x_j and friends in an n-dimensional standard basis (0-based).
inline Vector ei(std::size_t n, std::size_t i, int s = 1) {
  Vector v = zeros(n);
  v[i] = s;
  return v;
}

inline Vector eij(std::size_t n, std::size_t i, int si, std::size_t j, int sj) {
  Vector v = zeros(n);
  v[i] += si;
  v[j] += sj;
  return v;
}

struct Realization {
  std::size_t ambient = 0;
  std::vector<Vector> simple;
  std::vector<Vector> positive;
};

inline Realization classical(Family f, int r) {
  Realization out;
  const auto n = static_cast<std::size_t>(f == Family::A ? r + 1 : r);
  const auto ru = static_cast<std::size_t>(r);
  out.ambient = n;
  for (std::size_t i = 0; i + 1 < ru; ++i) out.simple.push_back(eij(n, i, 1, i + 1, -1));
  switch (f) {
    case Family::A:
      out.simple.push_back(eij(n, ru - 1, 1, ru, -1));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.positive.push_back(eij(n, i, 1, j, -1));
      break;
    case Family::B:
    case Family::BC:
      out.simple.push_back(ei(n, ru - 1));
      break;
    case Family::C:
      out.simple.push_back(ei(n, ru - 1, 2));
      break;
    case Family::D:
      out.simple.push_back(eij(n, ru - 2, 1, ru - 1, 1));
      break;
    default:
      break;
  }
  if (f != Family::A) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        out.positive.push_back(eij(n, i, 1, j, -1));
        out.positive.push_back(eij(n, i, 1, j, 1));
      }
    for (std::size_t i = 0; i < n; ++i) {
      if (f == Family::B || f == Family::BC) out.positive.push_back(ei(n, i));
      if (f == Family::C || f == Family::BC) out.positive.push_back(ei(n, i, 2));
    }
  }
  return out;
}

inline Vector half(std::initializer_list<int> twice) {
  Vector v;
  for (int x : twice) v.emplace_back(x, 2);
  return v;
}

/// Half-spin style roots 1/2 (sum of signed basis vectors).
inline Vector half_signs(const std::vector<int>& signs) {
  Vector v;
  for (int s : signs) v.emplace_back(s, 2);
  return v;
}

inline Realization exceptional_e(int rank) {
  Realization out;
  const std::size_t n = 8;
  out.ambient = n;
  // e8 simple roots; e6 and e7 use the first six and seven.
  const std::vector<Vector> e8_simple = {
      half({1, -1, -1, -1, -1, -1, -1, 1}),
      eij(n, 0, 1, 1, 1),
      eij(n, 1, 1, 0, -1),
      eij(n, 2, 1, 1, -1),
      eij(n, 3, 1, 2, -1),
      eij(n, 4, 1, 3, -1),
      eij(n, 5, 1, 4, -1),
      eij(n, 6, 1, 5, -1),
  };
  out.simple.assign(e8_simple.begin(), e8_simple.begin() + rank);

  const std::size_t m = rank == 8 ? 8 : (rank == 7 ? 6 : 5);  // range of the +/- e_i + e_j block
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      out.positive.push_back(eij(n, j, 1, i, 1));
      out.positive.push_back(eij(n, j, 1, i, -1));
    }

  const int free = rank == 8 ? 7 : (rank == 7 ? 6 : 5);
  for (int mask = 0; mask < (1 << free); ++mask) {
    const int parity = __builtin_popcount(static_cast<unsigned>(mask)) & 1;
    std::vector<int> s(8);
    for (int i = 0; i < free; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
    if (rank == 8) {
      if (parity != 0) continue;
      s[7] = 1;
    } else if (rank == 7) {
      if (parity != 1) continue;
      s[6] = -1;
      s[7] = 1;
    } else {
      if (parity != 0) continue;
      s[5] = -1;
      s[6] = -1;
      s[7] = 1;
    }
    out.positive.push_back(half_signs(s));
  }
  if (rank == 7) out.positive.push_back(eij(n, 7, 1, 6, -1));
  return out;
}

inline Realization exceptional_f4() {
  Realization out;
  const std::size_t n = 4;
  out.ambient = n;
  out.simple = {eij(n, 1, 1, 2, -1), eij(n, 2, 1, 3, -1), ei(n, 3), half({1, -1, -1, -1})};
  for (std::size_t i = 0; i < n; ++i) out.positive.push_back(ei(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      out.positive.push_back(eij(n, i, 1, j, -1));
      out.positive.push_back(eij(n, i, 1, j, 1));
    }
  for (int mask = 0; mask < 8; ++mask)
    out.positive.push_back(
        half_signs({1, (mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 4) ? -1 : 1}));
  return out;
}

inline Realization exceptional_g2() {
  Realization out;
  out.ambient = 3;
  out.simple = {vec_from_ints({1, -1, 0}), vec_from_ints({-2, 1, 1})};
  out.positive = {vec_from_ints({1, -1, 0}),  vec_from_ints({-2, 1, 1}), vec_from_ints({-1, 0, 1}),
                  vec_from_ints({0, -1, 1}),  vec_from_ints({1, -2, 1}), vec_from_ints({-1, -1, 2})};
  return out;
}

inline void check_rank(const RootSystemId& id) {
  const int r = id.rank;
  auto fail = [&](const std::string& why) {
    throw ConstructionError("cannot build " + std::string(family_name(id.family)) + std::to_string(r) + ": " + why);
  };
  if (is_exceptional(id.family)) {
    if (r != exceptional_rank(id.family)) fail("exceptional family has fixed rank " + std::to_string(exceptional_rank(id.family)));
    return;
  }
  if (r < 1) fail("rank must be positive");
  if (id.family == Family::B && r < 2) fail("b needs rank >= 2");
  if (id.family == Family::C && r < 2) fail("c needs rank >= 2 (use a1)");
  if (id.family == Family::D && r < 3) fail("d needs rank >= 3");
}

/// Highest-root coefficients that must come out of every build.
inline void check_anchor_factors(const RootSystemId& id, const std::vector<int>& d) {
  auto expect = [&](int j, int v) {
    if (d.at(static_cast<std::size_t>(j - 1)) != v)
      throw ConstructionError(to_string(id) + ": expected d_" + std::to_string(j) + " = " + std::to_string(v));
  };
  switch (id.family) {
    case Family::G2: expect(1, 3); break;
    case Family::F4: expect(4, 2); break;
    case Family::E7: expect(7, 1); break;
    case Family::E8: expect(1, 2); break;
    case Family::E6: expect(4, 3); expect(1, 1); expect(6, 1); break;
    default: break;
  }
}

}  // namespace detail

/// Builds the root system in its standard coordinate realization.
/// `scale` multiplies the ambient inner product.
inline RootSystem build(const RootSystemId& id, Rational scale = 1) {
  detail::check_rank(id);
  if (scale.sign() <= 0) throw ConstructionError("metric scale must be positive");

  detail::Realization re;
  switch (id.family) {
    case Family::E6:
    case Family::E7:
    case Family::E8: re = detail::exceptional_e(id.rank); break;
    case Family::F4: re = detail::exceptional_f4(); break;
    case Family::G2: re = detail::exceptional_g2(); break;
    default: re = detail::classical(id.family, id.rank); break;
  }

  RootSystem rs;
  rs.id = id;
  rs.ambient_dim = re.ambient;
  rs.metric_scale = scale;
  const auto r = static_cast<std::size_t>(id.rank);
  for (std::size_t k = 0; k < r; ++k) {
    Root a;
    a.vector = re.simple[k];
    a.coefficients.assign(r, 0);
    a.coefficients[k] = 1;
    rs.simple_roots.push_back(std::move(a));
  }

  for (auto& v : re.positive) {
    const auto c = coefficients(rs, v);
    Root root;
    root.vector = std::move(v);
    for (const auto& ck : c) {
      if (!ck.is_integer() || ck.sign() < 0)
        throw ConstructionError(to_string(id) + ": listed root " + to_string(root.vector) + " is not positive integral");
      root.coefficients.push_back(static_cast<int>(ck.num()));
    }
    rs.positive_roots.push_back(std::move(root));
  }

  auto height = [](const Root& a) {
    int h = 0;
    for (int c : a.coefficients) h += c;
    return h;
  };
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [&](const Root& a, const Root& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a.coefficients < b.coefficients;
  });

  // Length classes keyed by squared norm.
  std::set<Rational> norms;
  for (const auto& a : rs.positive_roots) norms.insert(antipodal::inner(a.vector, a.vector));
  if (norms.size() > 3) throw ConstructionError(to_string(id) + ": more than three root lengths");
  std::map<Rational, LengthClass> cls;
  {
    std::vector<LengthClass> order;
    if (norms.size() == 1) order = {LengthClass::Long};
    if (norms.size() == 2) order = {LengthClass::Short, LengthClass::Long};
    if (norms.size() == 3) order = {LengthClass::Short, LengthClass::Medium, LengthClass::Long};
    std::size_t i = 0;
    for (const auto& n : norms) cls[n] = order[i++];
  }
  for (auto& a : rs.positive_roots) a.length_class = cls.at(antipodal::inner(a.vector, a.vector));
  for (auto& a : rs.simple_roots) a.length_class = cls.at(antipodal::inner(a.vector, a.vector));

  rs.highest_root = rs.positive_roots.back();
  if (rs.positive_roots.size() > 1 && height(rs.positive_roots[rs.positive_roots.size() - 2]) == height(rs.highest_root))
    throw ConstructionError(to_string(id) + ": highest root is not unique");
  rs.d = rs.highest_root.coefficients;
  for (const auto& a : rs.positive_roots)
    for (std::size_t k = 0; k < r; ++k)
      if (a.coefficients[k] > rs.d[k]) throw ConstructionError(to_string(id) + ": root exceeds highest root");
  detail::check_anchor_factors(id, rs.d);
  return rs;
}

/// Classical |positive roots| for a family and rank.
inline std::size_t expected_positive_count(const RootSystemId& id) {
  const auto r = static_cast<std::size_t>(id.rank);
  switch (id.family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::BC: return r * (r + 1);
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
    case Family::F4: return 24;
    case Family::G2: return 6;
  }
  return 0;
}

/// Positive roots partitioned by length class (indices into positive_roots).
inline std::map<LengthClass, std::vector<std::size_t>> length_classes(const RootSystem& rs) {
  std::map<LengthClass, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) out[rs.positive_roots[i].length_class].push_back(i);
  return out;
}

struct RootSubsystem {
  const RootSystem* parent = nullptr;
  std::vector<std::size_t> members;  // indices into parent->positive_roots
};

/// Sum-closure test on +/- members.
inline bool subsystem_check(const RootSubsystem& sub) {
  const RootSystem& rs = *sub.parent;
  std::set<Vector> all;
  for (const auto& a : rs.positive_roots) {
    all.insert(a.vector);
    all.insert(-a.vector);
  }
  std::set<Vector> mem;
  for (std::size_t i : sub.members) {
    const Vector& v = rs.positive_roots.at(i).vector;
    mem.insert(v);
    mem.insert(-v);
  }
  for (const auto& a : mem)
    for (const auto& b : mem) {
      const Vector s = a + b;
      if (all.count(s) && !mem.count(s)) return false;
    }
  return true;
}

/// Simple reflection s_i applied to v.
inline Vector reflect(const RootSystem& rs, std::size_t i, const Vector& v) {
  const Vector& a = rs.simple_roots.at(i).vector;
  const Rational k = Rational(2) * antipodal::inner(v, a) / antipodal::inner(a, a);
  Vector w = v;
  axpy(w, -k, a);
  return w;
}

}  // namespace antipodal
