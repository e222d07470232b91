#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "antipodal/antipodal.hpp"
#include "antipodal/catalog.hpp"
#include "antipodal/errors.hpp"
#include "antipodal/tables.hpp"

// JSON emission for reports, the catalog and rendered tables. Reports go
// through plain records so that parse(emit(report)) can be compared.

namespace antipodal::json_io {

using nlohmann::json;

inline constexpr int schema_version = 1;

struct OrbitRecord {
  std::string form;
  std::vector<int> corner_indices;
  std::vector<std::pair<std::int64_t, std::int64_t>> coords;
  std::size_t j_set_size = 0;
  long dimension = 0;
  int deck_class = 0;

  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

struct ReportRecord {
  int schema = schema_version;
  std::string space;
  Params params;
  std::optional<std::string> gamma;
  std::string status;
  std::vector<OrbitRecord> orbits;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

inline ReportRecord record(const AntipodalReport& rep) {
  ReportRecord out;
  out.space = rep.space ? rep.space->id : "";
  out.params = rep.params;
  if (rep.gamma) out.gamma = rep.gamma->label;
  out.status = to_string(rep.status);
  for (const auto& o : rep.orbits) {
    OrbitRecord r;
    r.form = to_string(o.base.form);
    r.corner_indices = o.base.corner_indices;
    for (const auto& c : o.base.scaled_vector) r.coords.emplace_back(c.num(), c.den());
    r.j_set_size = o.tangent_roots.size();
    r.dimension = o.dimension;
    r.deck_class = o.deck_class;
    out.orbits.push_back(std::move(r));
  }
  return out;
}

inline json to_json(const ReportRecord& r) {
  json orbits = json::array();
  for (const auto& o : r.orbits) {
    json coords = json::array();
    for (const auto& [n, d] : o.coords) coords.push_back({n, d});
    orbits.push_back({{"base", {{"form", o.form}, {"corner_indices", o.corner_indices}, {"coords", coords}}},
                      {"j_set_size", o.j_set_size},
                      {"dimension", o.dimension},
                      {"deck_class", o.deck_class}});
  }
  return {{"schema_version", r.schema},
          {"space", r.space},
          {"params", {{"r", r.params.r}, {"q", r.params.q}}},
          {"gamma", r.gamma ? json(*r.gamma) : json(nullptr)},
          {"status", r.status},
          {"orbits", orbits}};
}

inline json to_json(const AntipodalReport& rep) { return to_json(record(rep)); }

/// Inverse of to_json; throws PreconditionError on a malformed document.
inline ReportRecord record_from_json(const json& j) {
  try {
    ReportRecord r;
    r.schema = j.at("schema_version").get<int>();
    if (r.schema != schema_version)
      throw PreconditionError("unsupported report schema version " + std::to_string(r.schema));
    r.space = j.at("space").get<std::string>();
    r.params.r = j.at("params").at("r").get<int>();
    r.params.q = j.at("params").at("q").get<int>();
    if (!j.at("gamma").is_null()) r.gamma = j.at("gamma").get<std::string>();
    r.status = j.at("status").get<std::string>();
    for (const auto& o : j.at("orbits")) {
      OrbitRecord x;
      x.form = o.at("base").at("form").get<std::string>();
      x.corner_indices = o.at("base").at("corner_indices").get<std::vector<int>>();
      for (const auto& c : o.at("base").at("coords")) x.coords.emplace_back(c.at(0).get<std::int64_t>(), c.at(1).get<std::int64_t>());
      x.j_set_size = o.at("j_set_size").get<std::size_t>();
      x.dimension = o.at("dimension").get<long>();
      x.deck_class = o.at("deck_class").get<int>();
      r.orbits.push_back(std::move(x));
    }
    return r;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed report JSON: ") + e.what());
  }
}

inline json to_json(const SpaceDescriptor& s) {
  json mult = json::object();
  for (const auto& [cls, f] : s.multiplicity) mult[to_string(cls)] = f;
  return {{"id", s.id},
          {"name", s.name},
          {"cartan_label", s.cartan_label},
          {"table", s.table},
          {"type", s.type_ii ? "II" : "I"},
          {"sigma", s.sigma_label()},
          {"rank_expr", s.rank_expr()},
          {"r_range", s.has_r ? json(s.range_label()) : json(nullptr)},
          {"has_q", s.has_q},
          {"multiplicities", mult},
          {"dim", s.dim_m},
          {"gammas", s.gammas},
          {"excluded", s.excluded},
          {"dims", s.dims}};
}

inline json catalog_json() {
  json out = json::array();
  for (const auto& s : spaces()) out.push_back(to_json(s));
  return out;
}

inline json to_json(const tables::Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json o = json::object();
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) o[t.columns[i]] = row[i];
    rows.push_back(o);
  }
  return {{"schema_version", schema_version}, {"table", t.number}, {"caption", t.caption}, {"columns", t.columns}, {"rows", rows}};
}

}  // namespace antipodal::json_io
