#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "antipodal/golden.hpp"
#include "antipodal/tables.hpp"

using namespace antipodal;

namespace {

std::string squash(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

bool has_line(const std::string& text, const std::string& want) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (squash(line) == squash(want)) return true;
  return false;
}

}  // namespace

TEST(Tables, Table1RendersGeneratedRows) {
  const auto text = tables::render_text(tables::make_table(1));
  EXPECT_TRUE(has_line(text, "𝔤₂ | e₁ | d₁=3")) << text;
  EXPECT_TRUE(has_line(text, "𝔡₄ | e₁; e₃; e₄ | d₁=1; d₃=1; d₄=1")) << text;
  EXPECT_TRUE(has_line(text, "𝔞_{2r} | eᵣ; e_{r+1} | dᵣ=1; d_{r+1}=1")) << text;
  const auto ascii = tables::render_text(tables::make_table(1), true);
  EXPECT_TRUE(has_line(ascii, "g2 | e_1 | d_1=3")) << ascii;
}

TEST(Tables, Table2SymbolicRows) {
  const auto text = tables::render_text(tables::make_table(2));
  EXPECT_TRUE(has_line(text, "𝔠ᵣ (r odd) | ℤ₂ | ½(e_{(r-1)/2}+e_{(r+1)/2}) | (2,2)")) << text;
  EXPECT_TRUE(has_line(text, "𝔢₆ | ℤ₃ | e₄ | 3")) << text;
  EXPECT_TRUE(has_line(text, "𝔞ᵣ | ℤ_{r+1} | 1/(r+1)(e₁+…+eᵣ) | (1,…,1)")) << text;
}

TEST(Tables, EvaluatedDimensionRows) {
  const auto t4 = tables::make_table(4, Params{3, 0});
  bool found = false;
  for (const auto& row : t4.rows)
    if (row[0] == "C II") {
      EXPECT_EQ(row.back(), "27");
      found = true;
    }
  EXPECT_TRUE(found);
  const auto t3 = tables::make_table(3, Params{5, 2});
  int checked = 0;
  for (const auto& row : t3.rows)
    if (row[1].rfind("Gr_{r,r+q} ", 0) == 0 && row[2] == "b_5") {
      EXPECT_EQ(row.back(), "10");
      ++checked;
    }
  EXPECT_EQ(checked, 1);
}

TEST(Tables, SymbolicDimensionsMatchPublishedFormulas) {
  const auto t = tables::make_table(4);
  std::map<std::string, std::string> dims;
  for (const auto& row : t.rows) dims[row[1] + "|" + row[3]] = row.back();
  EXPECT_EQ(dims["Sp(r)/U(r) (r>=3, r odd)|Z_2"], "(r^2+2r-1)/2");
  EXPECT_EQ(dims["Gr_{r,r}(H) (r>=3, r odd)|Z_2"], "2r^2+4r-3");
  EXPECT_EQ(dims["SU(r+1)/SO(r+1) (r>=3)|otherwise"], "unknown");
}

TEST(Tables, CsvHasFixedColumns) {
  const auto csv = tables::render_csv(tables::make_table(1));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "Sigma,max(Delta'),Factors d_j");
  EXPECT_NE(csv.find("\"b_2, b_3\",e_1,d_1=1"), std::string::npos);
  EXPECT_THROW(tables::make_table(7), RangeError);
}

// Generated Table 1 cells against the published rows at every rank.
TEST(Tables, Table1CellsMatchPublishedAtEachRank) {
  const auto& rows = tables::table1_rows();
  const auto& gold = golden::table1();
  ASSERT_EQ(rows.size(), gold.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int v : rows[i].dom.sample(12)) {
      const auto val = tables::table1_value(rows[i], v);
      EXPECT_EQ(val.corners, golden::table1_corners(gold[i], v)) << rows[i].key() << " r=" << v;
      EXPECT_EQ(val.factors, golden::table1_factors(gold[i], v)) << rows[i].key() << " r=" << v;
    }
}

TEST(Tables, EvaluatedTableRowsAreNumeric) {
  for (int n = 1; n <= 6; ++n) {
    const auto t = tables::make_table(n, Params{6, 2});
    EXPECT_FALSE(t.rows.empty());
    for (const auto& row : t.rows) EXPECT_EQ(row.size(), t.columns.size());
  }
}
