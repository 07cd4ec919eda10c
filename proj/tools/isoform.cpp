#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isoform/catalog.hpp"
#include "isoform/errors.hpp"
#include "isoform/spec_json.hpp"

namespace {

using namespace isoform;

long long resolve_cap(long long flag_value, bool flag_set) {
  if (flag_set) return flag_value;
  if (const char* env = std::getenv("ISOFORM_CAP")) {
    try {
      return std::stoll(env);
    } catch (...) {
      throw Error("ISOFORM_CAP: not an integer: " + std::string(env));
    }
  }
  return kDefaultWeylCap;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_analyze(const std::string& input, bool as_json, long long cap, bool expect_formal) {
  PairDocument doc = parse_pair_document(read_input(input));
  PairData pair = resolve(doc.spec);
  FormalityReport report = analyze(pair, AnalyzeConfig{cap});
  report.label = doc.label;
  if (as_json)
    std::cout << report_to_json(report).dump() << "\n";
  else
    std::cout << report_to_text(report);
  if (expect_formal && report.formal.has_value() && !*report.formal) return 2;
  return 0;
}

struct CatalogRow {
  CatalogEntry entry;
  FormalityReport report;
  std::vector<std::string> violations;
};

void check_row(CatalogRow& row) {
  const auto& r = row.report;
  auto fail = [&](const std::string& msg) { row.violations.push_back(msg); };
  if (r.fp_available && r.fp_dim > r.dim_quotient) fail("localization bound violated");
  if (row.entry.kind == "fold" && r.fp_available) {
    if (!r.formal.value_or(false)) fail("fold pair not formal");
    if (!r.ncz) fail("fold pair not ncz");
    if (r.fp_components != 1) fail("fold pair fixed set not connected");
  }
  if (row.entry.kind == "regular") {
    if (!r.formal.value_or(false)) fail("equal-rank pair not formal");
    long long expected = r.g.weyl_order() / r.k_weyl_order;
    if (r.dim_quotient != expected) fail("equal-rank dimension != |W(G)|/|W(K)|");
    if (r.fp_available && r.fp_components != expected)
      fail("equal-rank component count != |W(G)|/|W(K)|");
  }
  // Emitted JSON must round-trip byte-identically.
  std::string once = report_to_json(r).dump();
  std::string twice = nlohmann::ordered_json::parse(once).dump();
  if (once != twice) fail("JSON round-trip not byte-identical");
}

int run_catalog(bool as_json, bool check, const std::string& filter, long long cap) {
  const auto& entries = builtin_catalog();
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (filter.empty() || entries[i].kind == filter) selected.push_back(i);

  // Rows are independent; analyze them concurrently but emit in catalog
  // order.
  std::vector<std::future<CatalogRow>> futures;
  futures.reserve(selected.size());
  for (std::size_t idx : selected) {
    futures.push_back(std::async(std::launch::async, [idx, cap, check]() {
      CatalogRow row{builtin_catalog()[idx], {}, {}};
      row.report = analyze(resolve(row.entry.spec), AnalyzeConfig{cap});
      row.report.label = row.entry.label;
      if (check) check_row(row);
      return row;
    }));
  }

  bool any_violation = false;
  nlohmann::ordered_json json_rows = nlohmann::ordered_json::array();
  if (!as_json) {
    std::cout << "label                          kind     G              dim   fp    cmp  formal  ncz\n";
    std::cout << "-----                          ----     -              ---   --    ---  ------  ---\n";
  }
  for (auto& f : futures) {
    CatalogRow row = f.get();
    const auto& r = row.report;
    if (as_json) {
      json_rows.push_back(report_to_json(r));
    } else {
      char line[256];
      std::snprintf(line, sizeof(line), "%-30s %-8s %-14s %-5lld %-5s %-4s %-7s %s\n",
                    row.entry.label.c_str(), row.entry.kind.c_str(), r.g.str().c_str(),
                    r.dim_quotient,
                    r.fp_available ? std::to_string(r.fp_dim).c_str() : "-",
                    r.fp_available ? std::to_string(r.fp_components).c_str() : "-",
                    r.formal.has_value() ? (*r.formal ? "yes" : "NO") : "?",
                    r.ncz ? "yes" : "no");
      std::cout << line;
    }
    for (const auto& v : row.violations) {
      any_violation = true;
      std::cerr << "CHECK FAILED [" << row.entry.label << "]: " << v << "\n";
    }
  }
  if (as_json) std::cout << json_rows.dump() << "\n";
  if (check && !any_violation)
    std::cerr << "catalog check: all " << selected.size() << " rows clean\n";
  return any_violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isoform: exact equivariant-formality verdicts for isotropy actions"};
  app.require_subcommand(1);

  long long cap = kDefaultWeylCap;
  bool json_out = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one pair-spec document");
  std::string input;
  bool expect_formal = false;
  analyze_cmd->add_option("file", input, "path to a JSON pair spec, or - for stdin")->required();
  auto* cap_opt_a = analyze_cmd->add_option("--cap", cap, "Weyl enumeration element cap");
  analyze_cmd->add_flag("--json", json_out, "emit the report as canonical JSON");
  analyze_cmd->add_flag("--expect-formal", expect_formal,
                        "exit 2 when the verdict is not formal");

  auto* catalog_cmd = app.add_subcommand("catalog", "run the built-in catalog of classical pairs");
  bool check = false;
  std::string filter;
  auto* cap_opt_c = catalog_cmd->add_option("--cap", cap, "Weyl enumeration element cap");
  catalog_cmd->add_flag("--json", json_out, "emit an array of canonical JSON reports");
  catalog_cmd->add_flag("--check", check, "verify hard invariants; exit nonzero on failure");
  catalog_cmd->add_option("--filter", filter, "only rows of this kind (fold|circle|regular|product)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze_cmd)) {
      long long effective = resolve_cap(cap, cap_opt_a->count() > 0);
      return run_analyze(input, json_out, effective, expect_formal);
    }
    long long effective = resolve_cap(cap, cap_opt_c->count() > 0);
    return run_catalog(json_out, check, filter, effective);
  } catch (const SpecParseError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
