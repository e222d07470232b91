#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antipodal/errors.hpp"
#include "antipodal/formula.hpp"
#include "antipodal/rootsys.hpp"

namespace antipodal {

struct Params {
  int r = 0;
  int q = 0;

  friend bool operator==(const Params&, const Params&) = default;
};

/// Admissible values of a parameter.
struct ParamRange {
  int min = 1;
  int max = 0;              // 0: unbounded
  int parity = 0;           // 0 any, 1 odd, 2 even
  std::vector<int> only;    // if non-empty, exactly these values

  [[nodiscard]] bool contains(int v) const {
    if (!only.empty()) return std::find(only.begin(), only.end(), v) != only.end();
    if (v < min || (max != 0 && v > max)) return false;
    if (parity == 1 && v % 2 == 0) return false;
    if (parity == 2 && v % 2 != 0) return false;
    return true;
  }

  [[nodiscard]] std::vector<int> values_up_to(int hi) const {
    std::vector<int> out;
    for (int v = 0; v <= hi; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  [[nodiscard]] std::string describe() const {
    if (!only.empty()) {
      std::string s = "r in {";
      for (std::size_t i = 0; i < only.size(); ++i) s += (i ? "," : "") + std::to_string(only[i]);
      return s + "}";
    }
    std::string s = "r>=" + std::to_string(min);
    if (max) s += ", r<=" + std::to_string(max);
    if (parity == 1) s += ", r odd";
    if (parity == 2) s += ", r even";
    return s;
  }
};

/// One row of the symmetric-space tables.
struct SpaceDescriptor {
  std::string id;                    // unique ASCII slug
  std::string name;                  // display name
  std::string cartan_label;          // "A I" .. "G", or the group for type II
  int table = 3;                     // 3, 4 (type I quotients), 5, 6 (type II quotients)
  bool type_ii = false;
  Family family = Family::A;
  int rank_mul = 1;                  // rank(sigma) = rank_mul * r + rank_add
  int rank_add = 0;
  bool has_r = true;
  ParamRange r;
  bool has_q = false;
  std::map<LengthClass, std::string> multiplicity;
  std::string dim_m;                 // formula in r, q
  std::vector<std::string> gammas;   // subgroup symbols; empty for simply connected rows
  bool excluded = false;             // quotients whose maxima are not known
  std::vector<std::string> dims;     // orbit dimensions in table order; formulas in r, q

  [[nodiscard]] bool simply_connected() const { return gammas.empty() && !excluded; }

  [[nodiscard]] RootSystemId sigma(const Params& p) const {
    if (is_exceptional(family)) return {family, exceptional_rank(family)};
    return {family, has_r ? rank_mul * p.r + rank_add : rank_add};
  }

  /// "2r-1", "r", or a fixed number.
  [[nodiscard]] std::string rank_expr() const {
    if (is_exceptional(family)) return std::to_string(exceptional_rank(family));
    if (!has_r) return std::to_string(rank_add);
    if (r.only.size() == 1) return std::to_string(rank_mul * r.only.front() + rank_add);
    return render_affine({Rational(rank_mul), Rational(rank_add)});
  }

  /// ASCII system label, e.g. "a_{2r-1}", "bc_r", "e6".
  [[nodiscard]] std::string sigma_label() const {
    if (is_exceptional(family)) return family_name(family);
    const std::string e = rank_expr();
    return std::string(family_name(family)) + "_" + (e.size() == 1 ? e : "{" + e + "}");
  }

  [[nodiscard]] std::string range_label() const {
    std::string s = has_r ? r.describe() : "";
    if (has_q) s += std::string(s.empty() ? "" : ", ") + "q>=1";
    return s;
  }
};

namespace detail {

inline SpaceDescriptor row(std::string id, std::string name, std::string label, int table, Family f, int mul, int add,
                           ParamRange r, std::map<LengthClass, std::string> m, std::string dim,
                           std::vector<std::string> dims, std::vector<std::string> gammas = {}, bool has_q = false) {
  SpaceDescriptor s;
  s.id = std::move(id);
  s.name = std::move(name);
  s.cartan_label = std::move(label);
  s.table = table;
  s.type_ii = table == 5 || table == 6;
  s.family = f;
  s.rank_mul = mul;
  s.rank_add = add;
  s.has_r = !is_exceptional(f);
  s.r = std::move(r);
  s.has_q = has_q;
  s.multiplicity = std::move(m);
  s.dim_m = std::move(dim);
  s.dims = std::move(dims);
  s.gammas = std::move(gammas);
  return s;
}

inline ParamRange any_r(int min = 1) { return {min, 0, 0, {}}; }
inline ParamRange odd_r(int min = 1) { return {min, 0, 1, {}}; }
inline ParamRange even_r(int min = 2) { return {min, 0, 2, {}}; }
inline ParamRange only_r(std::vector<int> v) { return {1, 0, 0, std::move(v)}; }

inline std::map<LengthClass, std::string> uniform(const std::string& m) {
  return {{LengthClass::Short, m}, {LengthClass::Medium, m}, {LengthClass::Long, m}};
}

using LC = LengthClass;

inline std::vector<SpaceDescriptor> build_catalog() {
  std::vector<SpaceDescriptor> v;
  const auto one = uniform("1");
  const auto two = uniform("2");
  const auto four = uniform("4");

  // Simply connected, type I.
  v.push_back(row("AI-even", "SU(2r)/SO(2r)", "A I", 3, Family::A, 2, -1, any_r(), one, "2r^2+r-1", {"0"}));
  v.push_back(row("AI-odd", "SU(2r+1)/SO(2r+1)", "A I", 3, Family::A, 2, 0, any_r(), one, "2r^2+3r", {"0", "0"}));
  v.push_back(row("AII-even", "SU(4r)/Sp(2r)", "A II", 3, Family::A, 2, -1, any_r(), four, "8r^2-2r-1", {"0"}));
  v.push_back(row("AII-odd", "SU(4r+2)/Sp(2r+1)", "A II", 3, Family::A, 2, 0, any_r(), four, "8r^2+6r", {"0", "0"}));
  v.push_back(row("AIII-bc", "Gr_{r,r+q}(C)", "A III", 3, Family::BC, 1, 0, any_r(),
                  {{LC::Short, "2q"}, {LC::Medium, "2"}, {LC::Long, "1"}}, "2r(r+q)", {"2qr"}, {}, true));
  v.push_back(row("AIII-c", "Gr_{r,r}(C)", "A III", 3, Family::C, 1, 0, any_r(2),
                  {{LC::Short, "2"}, {LC::Long, "1"}}, "2r^2", {"0"}));
  v.push_back(row("CI", "Sp(r)/U(r)", "C I", 3, Family::C, 1, 0, any_r(2), one, "r(r+1)", {"0"}));
  v.push_back(row("CII-bc", "Gr_{r,r+q}(H)", "C II", 3, Family::BC, 1, 0, any_r(),
                  {{LC::Short, "4q"}, {LC::Medium, "4"}, {LC::Long, "3"}}, "4r(r+q)", {"4qr"}, {}, true));
  v.push_back(row("CII-c", "Gr_{r,2r}(H)", "C II", 3, Family::C, 1, 0, any_r(2),
                  {{LC::Short, "4"}, {LC::Long, "3"}}, "4r^2", {"0"}));
  const std::map<LengthClass, std::string> bdi = {{LC::Short, "q"}, {LC::Long, "1"}};
  v.push_back(row("BDI-b23", "Gr_{r,r+q}", "BD I", 3, Family::B, 1, 0, only_r({2, 3}), bdi, "r(r+q)", {"0"}, {}, true));
  v.push_back(row("BDI-b4", "Gr_{4,4+q}", "BD I", 3, Family::B, 1, 0, only_r({4}), bdi, "r(r+q)", {"0", "4q"}, {}, true));
  v.push_back(row("BDI-b", "Gr_{r,r+q}", "BD I", 3, Family::B, 1, 0, any_r(5), bdi, "r(r+q)", {"rq"}, {}, true));
  v.push_back(row("BDI-a1", "Gr_{1,1+q}", "BD I", 3, Family::A, 1, 0, only_r({1}), uniform("q"), "q+1", {"0"}, {}, true));
  v.push_back(row("BDI-d4", "Gr_{4,8}", "BD I", 3, Family::D, 1, 0, only_r({4}), one, "r^2", {"0", "0", "0"}));
  v.push_back(row("BDI-d", "Gr_{r,2r}", "BD I", 3, Family::D, 1, 0, any_r(5), one, "r^2", {"0", "0"}));
  v.push_back(row("DIII-c", "SO(4r)/U(2r)", "D III", 3, Family::C, 1, 0, any_r(2),
                  {{LC::Short, "4"}, {LC::Long, "1"}}, "2r(2r-1)", {"0"}));
  v.push_back(row("DIII-bc", "SO(4r+2)/U(2r+1)", "D III", 3, Family::BC, 1, 0, any_r(),
                  {{LC::Short, "4"}, {LC::Medium, "4"}, {LC::Long, "1"}}, "2r(2r+1)", {"4r"}));
  v.push_back(row("EI", "(e6, sp(4))", "E I", 3, Family::E6, 0, 6, {}, one, "42", {"0", "0"}));
  v.push_back(row("EII", "(e6, su(6)+su(2))", "E II", 3, Family::F4, 0, 4, {}, {{LC::Short, "2"}, {LC::Long, "1"}}, "40", {"16"}));
  v.push_back(row("EIII", "(e6, so(10)+R)", "E III", 3, Family::BC, 0, 2, only_r({2}),
                  {{LC::Short, "8"}, {LC::Medium, "6"}, {LC::Long, "1"}}, "32", {"16"}));
  v.push_back(row("EIV", "(e6, f4)", "E IV", 3, Family::A, 0, 2, only_r({2}), uniform("8"), "26", {"0", "0"}));
  v.push_back(row("EV", "(e7, su(8))", "E V", 3, Family::E7, 0, 7, {}, one, "70", {"0"}));
  v.push_back(row("EVI", "(e7, so(12)+su(2))", "E VI", 3, Family::F4, 0, 4, {}, {{LC::Short, "4"}, {LC::Long, "1"}}, "64", {"32"}));
  v.push_back(row("EVII", "(e7, e6+R)", "E VII", 3, Family::C, 0, 3, only_r({3}), {{LC::Short, "8"}, {LC::Long, "1"}}, "54", {"0"}));
  v.push_back(row("EVIII", "(e8, so(16))", "E VIII", 3, Family::E8, 0, 8, {}, one, "128", {"64"}));
  v.push_back(row("EIX", "(e8, e7+su(2))", "E IX", 3, Family::F4, 0, 4, {}, {{LC::Short, "8"}, {LC::Long, "1"}}, "112", {"64"}));
  v.push_back(row("FI", "(f4, sp(3)+su(2))", "F I", 3, Family::F4, 0, 4, {}, one, "28", {"8"}));
  v.push_back(row("FII", "(f4, so(9))", "F II", 3, Family::BC, 0, 1, only_r({1}), {{LC::Short, "8"}, {LC::Long, "7"}}, "16", {"8"}));
  v.push_back(row("G", "(g2, su(2)+su(2))", "G", 3, Family::G2, 0, 2, {}, one, "8", {"3"}));

  // Quotients, type I.
  v.push_back(row("AI-Z2-0", "SU(2r+2)/SO(2r+2)", "A I", 4, Family::A, 2, 1, odd_r(), one, "2r^2+5r+2", {"0"}, {"Z_2"}));
  v.push_back(row("AI-Z2-1", "SU(2r+2)/SO(2r+2)", "A I", 4, Family::A, 2, 1, even_r(), one, "2r^2+5r+2", {"2r+1"}, {"Z_2"}));
  v.push_back(row("AI-Zr1", "SU(r+1)/SO(r+1)", "A I", 4, Family::A, 1, 0, any_r(), one, "r(r+3)/2", {"r(r+1)/2"}, {"Z_{r+1}"}));
  v.push_back(row("AI-other", "SU(r+1)/SO(r+1)", "A I", 4, Family::A, 1, 0, any_r(3), one, "r(r+3)/2", {"unknown"}, {"otherwise"}));
  v.push_back(row("AII-Z2-0", "SU(4r+4)/Sp(2r+2)", "A II", 4, Family::A, 2, 1, odd_r(), four, "8r^2+14r+5", {"0"}, {"Z_2"}));
  v.push_back(row("AII-Z2-1", "SU(4r+4)/Sp(2r+2)", "A II", 4, Family::A, 2, 1, even_r(), four, "8r^2+14r+5", {"8r+4"}, {"Z_2"}));
  v.push_back(row("AII-Zr1", "SU(2r+2)/Sp(r+1)", "A II", 4, Family::A, 1, 0, any_r(), four, "2r^2+3r", {"2r(r+1)"}, {"Z_{r+1}"}));
  v.push_back(row("AII-other", "SU(2r+2)/Sp(r+1)", "A II", 4, Family::A, 1, 0, any_r(3), four, "2r^2+3r", {"unknown"}, {"otherwise"}));
  const std::map<LengthClass, std::string> a3c = {{LC::Short, "2"}, {LC::Long, "1"}};
  v.push_back(row("AIII-Z2-even", "Gr_{r,r}(C)", "A III", 4, Family::C, 1, 0, even_r(), a3c, "2r^2", {"r^2"}, {"Z_2"}));
  v.push_back(row("AIII-Z2-odd", "Gr_{r,r}(C)", "A III", 4, Family::C, 1, 0, odd_r(3), a3c, "2r^2", {"r^2+2r-2"}, {"Z_2"}));
  v.push_back(row("CI-Z2-even", "Sp(r)/U(r)", "C I", 4, Family::C, 1, 0, even_r(), one, "r(r+1)", {"r^2/2"}, {"Z_2"}));
  v.push_back(row("CI-Z2-odd", "Sp(r)/U(r)", "C I", 4, Family::C, 1, 0, odd_r(3), one, "r(r+1)", {"(r^2+2r-1)/2"}, {"Z_2"}));
  const std::map<LengthClass, std::string> c2c = {{LC::Short, "4"}, {LC::Long, "3"}};
  v.push_back(row("CII-Z2-even", "Gr_{r,r}(H)", "C II", 4, Family::C, 1, 0, even_r(), c2c, "4r^2", {"2r^2"}, {"Z_2"}));
  v.push_back(row("CII-Z2-odd", "Gr_{r,r}(H)", "C II", 4, Family::C, 1, 0, odd_r(3), c2c, "4r^2", {"2r^2+4r-3"}, {"Z_2"}));
  v.push_back(row("BDI-b-Z2", "Gr_{r,r+q}", "BD I", 4, Family::B, 1, 0, any_r(2), bdi, "r(r+q)", {"rq"}, {"Z_2"}, true));
  v.push_back(row("BDI-d-Z2Z2", "Gr_{r,r}", "BD I", 4, Family::D, 1, 0, even_r(4), one, "r^2", {"r^2/2"}, {"Z_2+Z_2"}));
  v.push_back(row("BDI-d-Z4", "Gr_{r,r}", "BD I", 4, Family::D, 1, 0, odd_r(5), one, "r^2", {"(r^2+2r-3)/2"}, {"Z_4"}));
  v.push_back(row("BDI-d-p1", "Gr_{r,r}", "BD I", 4, Family::D, 1, 0, even_r(4), one, "r^2", {"0", "0"}, {"{e,p_1}"}));
  const std::vector<std::string> half_spin = {"{e,p_{r-1}}", "{e,p_r}"};
  v.push_back(row("BDI-d-pr-small", "Gr_{r,r}", "BD I", 4, Family::D, 1, 0, only_r({4, 6}), one, "r^2", {"0"}, half_spin));
  v.push_back(row("BDI-d8-pr", "Gr_{8,8}", "BD I", 4, Family::D, 1, 0, only_r({8}), one, "r^2", {"0", "r^2/2"}, half_spin));
  v.push_back(row("BDI-d-pr", "Gr_{r,r}", "BD I", 4, Family::D, 1, 0, even_r(10), one, "r^2", {"r^2/2"}, half_spin));
  const std::map<LengthClass, std::string> d3c = {{LC::Short, "4"}, {LC::Long, "1"}};
  v.push_back(row("DIII-Z2-even", "SO(4r)/U(2r)", "D III", 4, Family::C, 1, 0, even_r(), d3c, "2r(2r-1)", {"2r^2"}, {"Z_2"}));
  v.push_back(row("DIII-Z2-odd", "SO(4r)/U(2r)", "D III", 4, Family::C, 1, 0, odd_r(3), d3c, "2r(2r-1)", {"2r^2+4r-5"}, {"Z_2"}));
  v.push_back(row("EI-Z3", "(e6, sp(4))", "E I", 4, Family::E6, 0, 6, {}, one, "42", {"27"}, {"Z_3"}));
  v.push_back(row("EIV-Z3", "(e6, f4)", "E IV", 4, Family::A, 0, 2, only_r({2}), uniform("8"), "26", {"24"}, {"Z_{r+1}"}));
  v.push_back(row("EV-Z2", "(e7, su(8))", "E V", 4, Family::E7, 0, 7, {}, one, "70", {"35"}, {"Z_2"}));
  v.push_back(row("EVII-Z2", "(e7, e6+R)", "E VII", 4, Family::C, 0, 3, only_r({3}), {{LC::Short, "8"}, {LC::Long, "1"}}, "54", {"49"}, {"Z_2"}));

  // Simply connected, type II.
  v.push_back(row("SU-even", "SU(2r)", "SU", 5, Family::A, 2, -1, any_r(), two, "4r^2-1", {"0"}));
  v.push_back(row("SU-odd", "SU(2r+1)", "SU", 5, Family::A, 2, 0, any_r(), two, "4r^2+4r", {"0", "0"}));
  v.push_back(row("Spin-odd-23", "Spin(2r+1)", "Spin", 5, Family::B, 1, 0, only_r({2, 3}), two, "r(2r+1)", {"0"}));
  v.push_back(row("Spin9", "Spin(9)", "Spin", 5, Family::B, 1, 0, only_r({4}), two, "r(2r+1)", {"0", "8"}));
  v.push_back(row("Spin-odd", "Spin(2r+1)", "Spin", 5, Family::B, 1, 0, any_r(5), two, "r(2r+1)", {"2r"}));
  v.push_back(row("Sp", "Sp(r)", "Sp", 5, Family::C, 1, 0, any_r(2), two, "r(2r+1)", {"0"}));
  v.push_back(row("Spin8", "Spin(8)", "Spin", 5, Family::D, 1, 0, only_r({4}), two, "r(2r-1)", {"0", "0", "0"}));
  v.push_back(row("Spin-even", "Spin(2r)", "Spin", 5, Family::D, 1, 0, any_r(5), two, "r(2r-1)", {"0", "0"}));
  v.push_back(row("E6", "E_6", "E_6", 5, Family::E6, 0, 6, {}, two, "78", {"0", "0"}));
  v.push_back(row("E7", "E_7", "E_7", 5, Family::E7, 0, 7, {}, two, "133", {"0"}));
  v.push_back(row("E8", "E_8", "E_8", 5, Family::E8, 0, 8, {}, two, "248", {"128"}));
  v.push_back(row("F4", "F_4", "F_4", 5, Family::F4, 0, 4, {}, two, "52", {"16"}));
  v.push_back(row("G2", "G_2", "G_2", 5, Family::G2, 0, 2, {}, two, "14", {"6"}));

  // Quotients, type II.
  v.push_back(row("SU-Z2", "SU(2r+2)", "SU", 6, Family::A, 2, 1, any_r(), two, "4r^2+8r+3", {"4r+2"}, {"Z_2"}));
  v.push_back(row("SU-Zr1", "SU(r+1)", "SU", 6, Family::A, 1, 0, any_r(), two, "r^2+2r", {"r(r+1)"}, {"Z_{r+1}"}));
  v.push_back(row("SU-other", "SU(r+1)", "SU", 6, Family::A, 1, 0, any_r(3), two, "r^2+2r", {"unknown"}, {"otherwise"}));
  v.push_back(row("Spin-odd-Z2", "Spin(2r+1)", "Spin", 6, Family::B, 1, 0, any_r(2), two, "r(2r+1)", {"2r"}, {"Z_2"}));
  v.push_back(row("Sp-Z2-even", "Sp(r)", "Sp", 6, Family::C, 1, 0, even_r(), two, "r(2r+1)", {"r^2"}, {"Z_2"}));
  v.push_back(row("Sp-Z2-odd", "Sp(r)", "Sp", 6, Family::C, 1, 0, odd_r(3), two, "r(2r+1)", {"r^2+2r-1"}, {"Z_2"}));
  v.push_back(row("Spin-even-Z2Z2", "Spin(2r)", "Spin", 6, Family::D, 1, 0, even_r(4), two, "r(2r-1)", {"r^2"}, {"Z_2+Z_2"}));
  v.push_back(row("Spin-even-Z4", "Spin(2r)", "Spin", 6, Family::D, 1, 0, odd_r(5), two, "r(2r-1)", {"r^2+2r-3"}, {"Z_4"}));
  v.push_back(row("Spin-even-p1", "Spin(2r)", "Spin", 6, Family::D, 1, 0, even_r(4), two, "r(2r-1)", {"0", "0"}, {"{e,p_1}"}));
  v.push_back(row("Spin-even-pr-small", "Spin(2r)", "Spin", 6, Family::D, 1, 0, only_r({4, 6}), two, "r(2r-1)", {"0"}, half_spin));
  v.push_back(row("Spin16-pr", "Spin(16)", "Spin", 6, Family::D, 1, 0, only_r({8}), two, "r(2r-1)", {"0", "64"}, half_spin));
  v.push_back(row("Spin-even-pr", "Spin(2r)", "Spin", 6, Family::D, 1, 0, even_r(10), two, "r(2r-1)", {"r^2"}, half_spin));
  v.push_back(row("E6-Z3", "E_6", "E_6", 6, Family::E6, 0, 6, {}, two, "78", {"54"}, {"Z_3"}));
  v.push_back(row("E7-Z2", "E_7", "E_7", 6, Family::E7, 0, 7, {}, two, "133", {"70"}, {"Z_2"}));

  for (auto& s : v) {
    if (s.gammas.size() == 1 && s.gammas.front() == "otherwise") s.excluded = true;
    // Rows with a pinned rank are stored with their concrete rank.
    if (s.rank_mul == 0) {
      s.has_r = false;
      s.r = {};
    }
  }
  return v;
}

}  // namespace detail

/// The full registry, one descriptor per table row.
inline const std::vector<SpaceDescriptor>& spaces() {
  static const std::vector<SpaceDescriptor> registry = detail::build_catalog();
  return registry;
}

inline const SpaceDescriptor& space_by_id(const std::string& id) {
  for (const auto& s : spaces())
    if (s.id == id) return s;
  throw MembershipError("no catalog entry with id '" + id + "'");
}

/// Rows whose id, name or label matches `key` (case-insensitive, spaces ignored).
inline std::vector<const SpaceDescriptor*> find_spaces(const std::string& key) {
  auto norm = [](const std::string& s) {
    std::string o;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) o += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return o;
  };
  const std::string k = norm(key);
  std::vector<const SpaceDescriptor*> out;
  for (const auto& s : spaces())
    if (norm(s.id) == k) return {&s};
  for (const auto& s : spaces())
    if (norm(s.name) == k || norm(s.cartan_label) == k) out.push_back(&s);
  return out;
}

inline void check_params(const SpaceDescriptor& s, const Params& p) {
  if (s.has_r && !s.r.contains(p.r))
    throw RangeError(s.id + ": r=" + std::to_string(p.r) + " outside " + s.r.describe());
  if (s.has_q && p.q < 1) throw RangeError(s.id + ": q must be a positive integer");
}

/// Multiplicity of a root of the space's restricted root system.
inline int multiplicity(const SpaceDescriptor& s, const Params& p, const Root& root) {
  const RootSystem rs = build(s.sigma(p));
  const Vector neg = -root.vector;
  const auto it = std::find_if(rs.positive_roots.begin(), rs.positive_roots.end(),
                               [&](const Root& a) { return a.vector == root.vector || a.vector == neg; });
  if (it == rs.positive_roots.end())
    throw MembershipError(to_string(root.vector) + " is not a root of " + to_string(rs.id));
  const auto m = Formula(s.multiplicity.at(it->length_class)).eval_int(p.r, p.q);
  if (m <= 0) throw ConstructionError(s.id + ": non-positive multiplicity");
  return static_cast<int>(m);
}

/// Per-class multiplicity table evaluated once, for bulk use.
inline std::map<LengthClass, int> multiplicity_table(const SpaceDescriptor& s, const Params& p) {
  std::map<LengthClass, int> out;
  for (const auto& [cls, f] : s.multiplicity) {
    const auto m = Formula(f).eval_int(p.r, p.q);
    if (m <= 0) throw ConstructionError(s.id + ": non-positive multiplicity for " + to_string(cls) + " roots");
    out[cls] = static_cast<int>(m);
  }
  return out;
}

/// rank + sum of multiplicities; must agree with the stored dimension formula.
inline long dim_space(const SpaceDescriptor& s, const Params& p) {
  check_params(s, p);
  const RootSystem rs = build(s.sigma(p));
  const auto m = multiplicity_table(s, p);
  long dim = rs.rank();
  for (const auto& a : rs.positive_roots) dim += m.at(a.length_class);
  const auto stored = Formula(s.dim_m).eval_int(p.r, p.q);
  if (stored != dim)
    throw ConstructionError(s.id + ": rank + multiplicities = " + std::to_string(dim) + " but dim M formula gives " +
                            std::to_string(stored));
  return dim;
}

}  // namespace antipodal
