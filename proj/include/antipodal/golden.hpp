#pragma once

#include <string>
#include <vector>

#include "antipodal/formula.hpp"
#include "antipodal/tables.hpp"

// Published values of Tables 1-6, transcribed as index and dimension
// formulas in r and q. Used by `verify` and the test suite only; table
// rendering never reads this file.

namespace antipodal::golden {

struct Table1Entry {
  std::string key;  // matches tables::Table1Row::key()
  std::vector<std::string> corners;
  std::vector<std::string> factors;
};

/// One base point: tag "single", "half" or "full", index formulas, and the
/// highest-root factors listed for it.
struct PointEntry {
  std::string tag;
  std::vector<std::string> indices;
  std::vector<std::string> factors;
};

struct Table2Entry {
  std::string key;  // matches tables::Table2Row::key()
  bool unknown = false;
  std::vector<PointEntry> points;
};

struct DimensionEntry {
  std::string id;  // catalog id
  int table = 0;
  std::string cartan_label;
  std::string name;
  std::vector<std::string> corners;  // Tables 3 and 5 only
  std::vector<std::string> dims;     // "unknown" for the excluded rows
};

inline const std::vector<Table1Entry>& table1() {
  static const std::vector<Table1Entry> t = {
      {"a_{2r}", {"r", "r+1"}, {"1", "1"}},
      {"a_{2r-1}", {"r"}, {"1"}},
      {"b_2, b_3", {"1"}, {"1"}},
      {"b_4", {"1", "4"}, {"1", "2"}},
      {"b_r (r>4)", {"r"}, {"2"}},
      {"c_r", {"r"}, {"1"}},
      {"d_4", {"1", "3", "4"}, {"1", "1", "1"}},
      {"d_r (r>4)", {"r-1", "r"}, {"1", "1"}},
      {"e6", {"1", "6"}, {"1", "1"}},
      {"e7", {"7"}, {"1"}},
      {"e8", {"1"}, {"2"}},
      {"f4", {"4"}, {"2"}},
      {"g2", {"1"}, {"3"}},
      {"bc_r", {"r"}, {"2"}},
  };
  return t;
}

inline const std::vector<Table2Entry>& table2() {
  static const std::vector<Table2Entry> t = {
      {"a_r (r>=3 odd, (r+1)/2 even) | Z_2", false, {{"single", {"(r+1)/4"}, {"1"}}}},
      {"a_r (r>=3 odd, (r+1)/2 odd) | Z_2", false, {{"half", {"(r-1)/4", "(r+3)/4"}, {"1", "1"}}}},
      {"a_r | Z_{r+1}", false, {{"full", {"r"}, {}}}},
      {"a_r | otherwise", true, {}},
      {"b_r | Z_2", false, {{"single", {"r"}, {"2"}}}},
      {"c_r (r even) | Z_2", false, {{"single", {"r/2"}, {"2"}}}},
      {"c_r (r odd) | Z_2", false, {{"half", {"(r-1)/2", "(r+1)/2"}, {"2", "2"}}}},
      {"d_r (r even) | Z_2+Z_2", false, {{"single", {"r/2"}, {"2"}}}},
      {"d_r (r odd) | Z_4", false, {{"half", {"(r-1)/2", "(r+1)/2"}, {"2", "2"}}}},
      {"d_r | {e,p_1}", false, {{"single", {"r-1"}, {"1"}}, {"single", {"r"}, {"1"}}}},
      {"d_4, d_6 (r even, r<=6) | {e,p_{r-1}}", false, {{"single", {"1"}, {"1"}}}},
      {"d_8 | {e,p_{r-1}}", false, {{"single", {"1"}, {"1"}}, {"single", {"4"}, {"2"}}}},
      {"d_r (r even, r>=10) | {e,p_{r-1}}", false, {{"single", {"r/2"}, {"2"}}}},
      {"d_4, d_6 (r even, r<=6) | {e,p_r}", false, {{"single", {"1"}, {"1"}}}},
      {"d_8 | {e,p_r}", false, {{"single", {"1"}, {"1"}}, {"single", {"4"}, {"2"}}}},
      {"d_r (r even, r>=10) | {e,p_r}", false, {{"single", {"r/2"}, {"2"}}}},
      {"e6 | Z_3", false, {{"single", {"4"}, {"3"}}}},
      {"e7 | Z_2", false, {{"single", {"2"}, {"2"}}}},
  };
  return t;
}

inline const std::vector<DimensionEntry>& dimension_tables() {
  static const std::vector<DimensionEntry> t = {
      // Table 3
      {"AI-even", 3, "A I", "SU(2r)/SO(2r)", {"r"}, {"0"}},
      {"AI-odd", 3, "A I", "SU(2r+1)/SO(2r+1)", {"r", "r+1"}, {"0", "0"}},
      {"AII-even", 3, "A II", "SU(4r)/Sp(2r)", {"r"}, {"0"}},
      {"AII-odd", 3, "A II", "SU(4r+2)/Sp(2r+1)", {"r", "r+1"}, {"0", "0"}},
      {"AIII-bc", 3, "A III", "Gr_{r,r+q}(C)", {"r"}, {"2qr"}},
      {"AIII-c", 3, "A III", "Gr_{r,r}(C)", {"r"}, {"0"}},
      {"CI", 3, "C I", "Sp(r)/U(r)", {"r"}, {"0"}},
      {"CII-bc", 3, "C II", "Gr_{r,r+q}(H)", {"r"}, {"4qr"}},
      {"CII-c", 3, "C II", "Gr_{r,2r}(H)", {"r"}, {"0"}},
      {"BDI-b23", 3, "BD I", "Gr_{r,r+q}", {"1"}, {"0"}},
      {"BDI-b4", 3, "BD I", "Gr_{4,4+q}", {"1", "4"}, {"0", "4q"}},
      {"BDI-b", 3, "BD I", "Gr_{r,r+q}", {"r"}, {"rq"}},
      {"BDI-a1", 3, "BD I", "Gr_{1,1+q}", {"1"}, {"0"}},
      {"BDI-d4", 3, "BD I", "Gr_{4,8}", {"1", "3", "4"}, {"0", "0", "0"}},
      {"BDI-d", 3, "BD I", "Gr_{r,2r}", {"r-1", "r"}, {"0", "0"}},
      {"DIII-c", 3, "D III", "SO(4r)/U(2r)", {"r"}, {"0"}},
      {"DIII-bc", 3, "D III", "SO(4r+2)/U(2r+1)", {"r"}, {"4r"}},
      {"EI", 3, "E I", "(e6, sp(4))", {"1", "6"}, {"0", "0"}},
      {"EII", 3, "E II", "(e6, su(6)+su(2))", {"4"}, {"16"}},
      {"EIII", 3, "E III", "(e6, so(10)+R)", {"2"}, {"16"}},
      {"EIV", 3, "E IV", "(e6, f4)", {"1", "2"}, {"0", "0"}},
      {"EV", 3, "E V", "(e7, su(8))", {"7"}, {"0"}},
      {"EVI", 3, "E VI", "(e7, so(12)+su(2))", {"4"}, {"32"}},
      {"EVII", 3, "E VII", "(e7, e6+R)", {"3"}, {"0"}},
      {"EVIII", 3, "E VIII", "(e8, so(16))", {"1"}, {"64"}},
      {"EIX", 3, "E IX", "(e8, e7+su(2))", {"4"}, {"64"}},
      {"FI", 3, "F I", "(f4, sp(3)+su(2))", {"4"}, {"8"}},
      {"FII", 3, "F II", "(f4, so(9))", {"1"}, {"8"}},
      {"G", 3, "G", "(g2, su(2)+su(2))", {"1"}, {"3"}},
      // Table 4
      {"AI-Z2-0", 4, "A I", "SU(2r+2)/SO(2r+2)", {}, {"0"}},
      {"AI-Z2-1", 4, "A I", "SU(2r+2)/SO(2r+2)", {}, {"2r+1"}},
      {"AI-Zr1", 4, "A I", "SU(r+1)/SO(r+1)", {}, {"r(r+1)/2"}},
      {"AI-other", 4, "A I", "SU(r+1)/SO(r+1)", {}, {"unknown"}},
      {"AII-Z2-0", 4, "A II", "SU(4r+4)/Sp(2r+2)", {}, {"0"}},
      {"AII-Z2-1", 4, "A II", "SU(4r+4)/Sp(2r+2)", {}, {"8r+4"}},
      {"AII-Zr1", 4, "A II", "SU(2r+2)/Sp(r+1)", {}, {"2r(r+1)"}},
      {"AII-other", 4, "A II", "SU(2r+2)/Sp(r+1)", {}, {"unknown"}},
      {"AIII-Z2-even", 4, "A III", "Gr_{r,r}(C)", {}, {"r^2"}},
      {"AIII-Z2-odd", 4, "A III", "Gr_{r,r}(C)", {}, {"r^2+2r-2"}},
      {"CI-Z2-even", 4, "C I", "Sp(r)/U(r)", {}, {"r^2/2"}},
      {"CI-Z2-odd", 4, "C I", "Sp(r)/U(r)", {}, {"(r^2+2r-1)/2"}},
      {"CII-Z2-even", 4, "C II", "Gr_{r,r}(H)", {}, {"2r^2"}},
      {"CII-Z2-odd", 4, "C II", "Gr_{r,r}(H)", {}, {"2r^2+4r-3"}},
      {"BDI-b-Z2", 4, "BD I", "Gr_{r,r+q}", {}, {"rq"}},
      {"BDI-d-Z2Z2", 4, "BD I", "Gr_{r,r}", {}, {"r^2/2"}},
      {"BDI-d-Z4", 4, "BD I", "Gr_{r,r}", {}, {"(r^2+2r-3)/2"}},
      {"BDI-d-p1", 4, "BD I", "Gr_{r,r}", {}, {"0", "0"}},
      {"BDI-d-pr-small", 4, "BD I", "Gr_{r,r}", {}, {"0"}},
      {"BDI-d8-pr", 4, "BD I", "Gr_{8,8}", {}, {"0", "r^2/2"}},
      {"BDI-d-pr", 4, "BD I", "Gr_{r,r}", {}, {"r^2/2"}},
      {"DIII-Z2-even", 4, "D III", "SO(4r)/U(2r)", {}, {"2r^2"}},
      {"DIII-Z2-odd", 4, "D III", "SO(4r)/U(2r)", {}, {"2r^2+4r-5"}},
      {"EI-Z3", 4, "E I", "(e6, sp(4))", {}, {"27"}},
      {"EIV-Z3", 4, "E IV", "(e6, f4)", {}, {"24"}},
      {"EV-Z2", 4, "E V", "(e7, su(8))", {}, {"35"}},
      {"EVII-Z2", 4, "E VII", "(e7, e6+R)", {}, {"49"}},
      // Table 5
      {"SU-even", 5, "SU", "SU(2r)", {"r"}, {"0"}},
      {"SU-odd", 5, "SU", "SU(2r+1)", {"r", "r+1"}, {"0", "0"}},
      {"Spin-odd-23", 5, "Spin", "Spin(2r+1)", {"1"}, {"0"}},
      {"Spin9", 5, "Spin", "Spin(9)", {"1", "4"}, {"0", "8"}},
      {"Spin-odd", 5, "Spin", "Spin(2r+1)", {"r"}, {"2r"}},
      {"Sp", 5, "Sp", "Sp(r)", {"r"}, {"0"}},
      {"Spin8", 5, "Spin", "Spin(8)", {"1", "3", "4"}, {"0", "0", "0"}},
      {"Spin-even", 5, "Spin", "Spin(2r)", {"r-1", "r"}, {"0", "0"}},
      {"E6", 5, "E_6", "E_6", {"1", "6"}, {"0", "0"}},
      {"E7", 5, "E_7", "E_7", {"7"}, {"0"}},
      {"E8", 5, "E_8", "E_8", {"1"}, {"128"}},
      {"F4", 5, "F_4", "F_4", {"4"}, {"16"}},
      {"G2", 5, "G_2", "G_2", {"1"}, {"6"}},
      // Table 6
      {"SU-Z2", 6, "SU", "SU(2r+2)", {}, {"4r+2"}},
      {"SU-Zr1", 6, "SU", "SU(r+1)", {}, {"r(r+1)"}},
      {"SU-other", 6, "SU", "SU(r+1)", {}, {"unknown"}},
      {"Spin-odd-Z2", 6, "Spin", "Spin(2r+1)", {}, {"2r"}},
      {"Sp-Z2-even", 6, "Sp", "Sp(r)", {}, {"r^2"}},
      {"Sp-Z2-odd", 6, "Sp", "Sp(r)", {}, {"r^2+2r-1"}},
      {"Spin-even-Z2Z2", 6, "Spin", "Spin(2r)", {}, {"r^2"}},
      {"Spin-even-Z4", 6, "Spin", "Spin(2r)", {}, {"r^2+2r-3"}},
      {"Spin-even-p1", 6, "Spin", "Spin(2r)", {}, {"0", "0"}},
      {"Spin-even-pr-small", 6, "Spin", "Spin(2r)", {}, {"0"}},
      {"Spin16-pr", 6, "Spin", "Spin(16)", {}, {"0", "64"}},
      {"Spin-even-pr", 6, "Spin", "Spin(2r)", {}, {"r^2"}},
      {"E6-Z3", 6, "E_6", "E_6", {}, {"54"}},
      {"E7-Z2", 6, "E_7", "E_7", {}, {"70"}},
  };
  return t;
}

// Expected cell values at concrete parameters, in the engine's encoding.

inline tables::CellValue table1_corners(const Table1Entry& e, int r) {
  tables::CellValue c;
  for (const auto& f : e.corners) c.push_back({"e", {static_cast<long>(Formula(f).eval_int(r))}});
  return c;
}

inline tables::CellValue table1_factors(const Table1Entry& e, int r) {
  tables::CellValue c;
  for (std::size_t i = 0; i < e.corners.size(); ++i)
    c.push_back({"d", {static_cast<long>(Formula(e.corners[i]).eval_int(r)),
                       static_cast<long>(Formula(e.factors.at(i)).eval_int(r))}});
  return c;
}

inline tables::CellValue table2_points(const Table2Entry& e, int rank) {
  tables::CellValue c;
  for (const auto& p : e.points) {
    tables::Item it{p.tag, {}};
    for (const auto& f : p.indices) it.ints.push_back(static_cast<long>(Formula(f).eval_int(rank)));
    c.push_back(std::move(it));
  }
  return c;
}

inline tables::CellValue table2_factors(const Table2Entry& e, int rank) {
  tables::CellValue c;
  for (const auto& p : e.points) {
    tables::Item it{p.tag, {}};
    for (const auto& f : p.factors) it.ints.push_back(static_cast<long>(Formula(f).eval_int(rank)));
    c.push_back(std::move(it));
  }
  return c;
}

inline const DimensionEntry& dimension_entry(const std::string& id) {
  for (const auto& e : dimension_tables())
    if (e.id == id) return e;
  throw MembershipError("no golden row for '" + id + "'");
}

/// Published dimensions at (r, q); empty for "unknown".
inline std::vector<long> dimensions(const DimensionEntry& e, int r, int q) {
  std::vector<long> out;
  for (const auto& f : e.dims)
    if (f != "unknown") out.push_back(static_cast<long>(Formula(f).eval_int(r, q)));
  return out;
}

}  // namespace antipodal::golden
