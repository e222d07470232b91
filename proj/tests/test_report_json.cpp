#include <gtest/gtest.h>

#include "antipodal/report_json.hpp"

using namespace antipodal;

TEST(ReportJson, SchemaFields) {
  const auto j = json_io::to_json(antipodal_report(space_by_id("Spin-odd"), {5, 0}));
  EXPECT_EQ(j.at("schema_version"), 1);
  EXPECT_EQ(j.at("space"), "Spin-odd");
  EXPECT_EQ(j.at("params").at("r"), 5);
  EXPECT_TRUE(j.at("gamma").is_null());
  EXPECT_EQ(j.at("status"), "paper-validated");
  const auto& o = j.at("orbits").at(0);
  EXPECT_EQ(o.at("base").at("form"), "single");
  EXPECT_EQ(o.at("base").at("corner_indices"), nlohmann::json::array({5}));
  EXPECT_EQ(o.at("base").at("coords").at(0), nlohmann::json::array({1, 2}));
  EXPECT_EQ(o.at("j_set_size"), 5);
  EXPECT_EQ(o.at("dimension"), 10);
}

TEST(ReportJson, RoundTripOverTheCatalog) {
  std::size_t n = 0;
  for (const auto& s : spaces()) {
    for (const auto& p : tables::param_grid(s)) {
      std::vector<std::optional<std::string>> labels;
      if (s.simply_connected() || s.excluded) labels.emplace_back();
      else
        for (const auto& g : s.gammas) labels.emplace_back(g);
      for (const auto& label : labels) {
        const auto rec = json_io::record(antipodal_report(s, p, label));
        const auto text = json_io::to_json(rec).dump();
        EXPECT_EQ(json_io::record_from_json(nlohmann::json::parse(text)), rec) << s.id;
        ++n;
      }
    }
  }
  EXPECT_GT(n, 450u);
}

TEST(ReportJson, RejectsMalformedDocuments) {
  EXPECT_THROW(json_io::record_from_json(nlohmann::json::object()), PreconditionError);
  auto j = json_io::to_json(antipodal_report(space_by_id("G2"), {}));
  j["schema_version"] = 99;
  EXPECT_THROW(json_io::record_from_json(j), PreconditionError);
}

TEST(ReportJson, CatalogAndTables) {
  const auto cat = json_io::catalog_json();
  EXPECT_EQ(cat.size(), spaces().size());
  EXPECT_EQ(cat.at(0).at("sigma"), "a_{2r-1}");
  const auto t = json_io::to_json(tables::make_table(1));
  EXPECT_EQ(t.at("rows").size(), 14u);
  EXPECT_EQ(t.at("rows").at(12).at("Sigma"), "g2");
}
