#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "antipodal/antipodal_atlas.hpp"
#include "antipodal/report_json.hpp"
#include "antipodal/verify.hpp"

using namespace antipodal;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kExcluded = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string cell(const std::string& s, bool ascii) { return ascii ? s : tables::detail::unicode(s); }

std::string join(const std::vector<std::string>& v, const std::string& sep) { return tables::detail::join(v, sep); }

/// Picks the catalog row meant by `key` at the given parameters. Rows whose
/// range excludes r are dropped; a subgroup selects quotient rows admitting
/// it, otherwise simply connected rows win.
const SpaceDescriptor& resolve(const std::string& key, const Params& p, const std::optional<std::string>& gamma) {
  const auto found = find_spaces(key);
  if (found.empty()) throw UsageError("unknown space '" + key + "'");
  std::vector<const SpaceDescriptor*> in_range;
  for (const auto* s : found)
    if (!s->has_r || s->r.contains(p.r)) in_range.push_back(s);
  if (in_range.empty()) {
    std::string ranges;
    for (const auto* s : found) ranges += "\n  " + s->id + ": " + (s->has_r ? s->range_label() : "no parameters");
    throw UsageError("r=" + std::to_string(p.r) + " is outside the range of every row matching '" + key + "':" + ranges);
  }
  if (in_range.size() == 1) return *in_range.front();
  std::vector<const SpaceDescriptor*> pick;
  for (const auto* s : in_range) {
    if (!gamma) {
      if (s->simply_connected()) pick.push_back(s);
      continue;
    }
    if (s->simply_connected()) continue;
    try {
      const auto g = parse_gamma(build(s->sigma(p)), *gamma);
      const bool listed = std::find(s->gammas.begin(), s->gammas.end(), g.symbol) != s->gammas.end();
      if ((listed && g.supported) || (s->excluded && !g.supported)) pick.push_back(s);
    } catch (const std::invalid_argument&) {
    }
  }
  if (pick.size() == 1) return *pick.front();
  std::string ids;
  for (const auto* s : (pick.empty() ? in_range : pick)) ids += " " + s->id;
  throw UsageError("'" + key + "' is ambiguous here; use one of the ids:" + ids);
}

std::string base_text(const BasePoint& b) {
  auto e = [](int j) { return "e_" + tables::detail::sub(std::to_string(j)); };
  switch (b.form) {
    case BaseForm::SingleCorner: return e(b.corner_indices.front());
    case BaseForm::HalfSum: return "1/2(" + e(b.corner_indices[0]) + "+" + e(b.corner_indices[1]) + ")";
    case BaseForm::FullSum:
      return "1/" + std::to_string(b.corner_indices.size() + 1) + "(e_1+...+" + e(static_cast<int>(b.corner_indices.size())) + ")";
    case BaseForm::GeneralVertex: return "vertex";
  }
  return "?";
}

void print_report(const AntipodalReport& rep, const std::string& format, bool ascii) {
  if (format == "json") {
    std::cout << json_io::to_json(rep).dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "orbit,form,corner_indices,coords,j_set_size,dimension,deck_class\n";
    for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
      const auto& o = rep.orbits[i];
      std::vector<std::string> idx;
      for (int j : o.base.corner_indices) idx.push_back(std::to_string(j));
      std::cout << i + 1 << "," << to_string(o.base.form) << "," << tables::csv_escape(join(idx, " ")) << ","
                << tables::csv_escape(to_string(o.base.scaled_vector)) << "," << o.tangent_roots.size() << ","
                << o.dimension << "," << o.deck_class << "\n";
    }
    return;
  }
  const auto& s = *rep.space;
  std::cout << s.cartan_label << " " << cell(s.name, ascii) << "  [" << s.id << "]";
  if (s.has_r) std::cout << "  r=" << rep.params.r;
  if (s.has_q) std::cout << " q=" << rep.params.q;
  std::cout << "\nSigma: " << to_string(rep.rs.id) << "   dim M: " << dim_space(s, rep.params);
  if (rep.gamma) std::cout << "   Gamma: " << cell(rep.gamma->label, ascii);
  std::cout << "\nstatus: " << to_string(rep.status) << "\n";
  if (rep.orbits.empty()) return;
  tables::Table t;
  t.columns = {"orbit", "base point", "x/pi", "|J|", "dim", "deck class"};
  for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
    const auto& o = rep.orbits[i];
    t.rows.push_back({std::to_string(i + 1), base_text(o.base), to_string(o.base.scaled_vector),
                      std::to_string(o.tangent_roots.size()), std::to_string(o.dimension), std::to_string(o.deck_class)});
  }
  std::string body = tables::render_text(t, ascii);
  std::cout << body.substr(body.find('\n') + 1);
}

void print_list(const std::string& format, bool ascii) {
  if (format == "json") {
    std::cout << json_io::catalog_json().dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "name,cartan_label,sigma,rank_expr,gammas\n";
    for (const auto& s : spaces())
      std::cout << tables::csv_escape(s.name) << "," << tables::csv_escape(s.cartan_label) << ","
                << tables::csv_escape(s.sigma_label()) << "," << tables::csv_escape(s.rank_expr()) << ","
                << tables::csv_escape(join(s.gammas, " ")) << "\n";
    return;
  }
  tables::Table t;
  t.columns = {"id", "table", "label", "space", "Sigma", "range", "Gamma"};
  t.sigma_column = 4;
  for (const auto& s : spaces())
    t.rows.push_back({s.id, std::to_string(s.table), s.cartan_label, s.name, s.sigma_label(), s.range_label(),
                      s.excluded ? "otherwise (unknown)" : join(s.gammas, " or ")});
  std::string body = tables::render_text(t, ascii);
  std::cout << body.substr(body.find('\n') + 1);
}

void print_describe(const SpaceDescriptor& s, const std::string& format, bool ascii) {
  if (format == "json") {
    std::cout << json_io::to_json(s).dump(2) << "\n";
    return;
  }
  std::cout << "id:          " << s.id << "\n"
            << "table:       " << s.table << " (type " << (s.type_ii ? "II" : "I") << ")\n"
            << "label:       " << s.cartan_label << "\n"
            << "space:       " << cell(s.name, ascii) << "\n"
            << "Sigma:       " << s.sigma_label() << " (rank " << s.rank_expr() << ")\n"
            << "parameters:  " << (s.range_label().empty() ? "none" : s.range_label()) << "\n"
            << "dim M:       " << s.dim_m << "\n"
            << "multiplicity:";
  for (const auto& [cls, f] : s.multiplicity) std::cout << " " << to_string(cls) << "=" << f;
  std::cout << "\n";
  if (!s.simply_connected()) std::cout << "Gamma:       " << (s.excluded ? "otherwise" : join(s.gammas, " or ")) << "\n";
  std::cout << "dim A:       " << join(s.dims, "; ") << "\n";
}

Params parse_evaluate(const std::string& text) {
  Params p;
  std::istringstream in(text);
  std::string part;
  bool any = false;
  while (std::getline(in, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("--evaluate expects r=...,q=...");
    const std::string k = part.substr(0, eq);
    int v = 0;
    try {
      v = std::stoi(part.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--evaluate: '" + part + "' is not an integer assignment");
    }
    if (k == "r") p.r = v, any = true;
    else if (k == "q") p.q = v;
    else throw UsageError("--evaluate: unknown parameter '" + k + "'");
  }
  if (!any) throw UsageError("--evaluate needs a value for r");
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Antipodal sets of compact symmetric spaces"};
  app.name("antipodal-atlas");
  app.require_subcommand(1);

  std::string format = "text";
  bool ascii = false;
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    c->add_flag("--ascii", ascii, "Plain ASCII text output");
  };

  auto* list = app.add_subcommand("list", "List the catalog of spaces");
  add_format(list);

  std::string key;
  auto* describe = app.add_subcommand("describe", "Show one catalog entry");
  describe->add_option("space", key, "Id, name or Cartan label")->required();
  add_format(describe);

  Params params;
  std::optional<std::string> gamma;
  bool allow_unvalidated = false;
  auto* anti = app.add_subcommand("antipodal", "Compute the antipodal set of eK");
  anti->add_option("space", key, "Id, name or Cartan label")->required();
  anti->add_option("--r", params.r, "Row parameter r");
  anti->add_option("--q", params.q, "Row parameter q");
  anti->add_option("--gamma", gamma, "Central subgroup, e.g. Z_2 or {e,p_1}");
  anti->add_flag("--allow-unvalidated", allow_unvalidated, "Compute excluded quotients anyway");
  add_format(anti);

  int table_no = 0;
  std::optional<std::string> evaluate;
  auto* table = app.add_subcommand("table", "Render one of Tables 1-6");
  table->add_option("n", table_no, "Table number")->required()->check(CLI::Range(1, 6));
  table->add_option("--evaluate", evaluate, "Numeric rows at r=...,q=...");
  add_format(table);

  verify::Options vopt;
  auto* ver = app.add_subcommand("verify", "Check the engine against the published tables");
  ver->add_flag("--deep", vopt.deep, "Also run the brute-force oracles");
  ver->add_option("--inject-fault", vopt.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*list) {
      print_list(format, ascii);
    } else if (*describe) {
      const auto found = find_spaces(key);
      if (found.empty()) throw UsageError("unknown space '" + key + "'");
      for (std::size_t i = 0; i < found.size(); ++i) {
        if (i && format == "text") std::cout << "\n";
        print_describe(*found[i], format, ascii);
      }
    } else if (*anti) {
      const auto& s = resolve(key, params, gamma);
      if (s.has_q && params.q == 0) throw UsageError(s.id + " needs --q");
      const auto rep = antipodal_report(s, params, gamma, allow_unvalidated);
      if (rep.status == ReportStatus::ExcludedUnknown) {
        std::cerr << "antipodal-atlas: " << s.id << " with " << (gamma ? *gamma : std::string("this subgroup"))
                  << " is an excluded case; maxima are unknown (pass --allow-unvalidated to compute anyway)\n";
        if (format == "json") std::cout << json_io::to_json(rep).dump(2) << "\n";
        return kExcluded;
      }
      print_report(rep, format, ascii);
    } else if (*table) {
      std::optional<Params> at;
      if (evaluate) at = parse_evaluate(*evaluate);
      const auto t = tables::make_table(table_no, at);
      if (format == "json") std::cout << json_io::to_json(t).dump(2) << "\n";
      else if (format == "csv") std::cout << tables::render_csv(t);
      else std::cout << tables::render_text(t, ascii);
    } else if (*ver) {
      return verify::run_verify(vopt, std::cout) ? kOk : kMismatch;
    }
  } catch (const UsageError& e) {
    std::cerr << "antipodal-atlas: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "antipodal-atlas: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "antipodal-atlas: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
