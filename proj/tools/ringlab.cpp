// ringlab: classify ideals, verify the theorem suite, search for witnesses.
//
// Exit codes: 0 success, 1 a theorem conclusion failed, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/report.hpp"
#include "ringlab/ring_spec.hpp"
#include "ringlab/verifier.hpp"

using namespace ringlab;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::size_t default_max_order() {
  if (const char* env = std::getenv("RINGLAB_MAX_ORDER")) {
    try {
      const auto n = std::stoul(env);
      if (n >= 2) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid RINGLAB_MAX_ORDER='" << env << "'\n";
  }
  return 16;
}

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    stream = &file;
  }
  std::ostream& operator*() { return *stream; }
};

int classify_cmd(const std::string& ring_spec, const std::string& delta_spec, bool json, const std::string& out_path) {
  const auto built = parse_ring(ring_spec);
  const auto delta = parse_expansion(delta_spec, *built);
  RingAnalysis analysis(built->ring);
  const auto rows = classify(analysis, delta);
  Output out(out_path);
  if (json) {
    for (const auto& rec : classification_json(analysis, delta, rows)) *out << rec.dump() << "\n";
  } else {
    *out << classification_table(analysis, delta, rows);
  }
  return kOk;
}

int check_cmd(const std::string& theorem, std::size_t max_order, unsigned jobs, bool json, const std::string& out_path) {
  if (theorem != "all" && !is_theorem_id(theorem)) {
    std::cerr << "error: unknown theorem id '" << theorem << "'\n";
    return kUsage;
  }
  Output out(out_path);
  Workspace ws(build_catalog(CatalogConfig::for_max_order(max_order)), jobs);
  const std::vector<std::string> ids = theorem == "all" ? theorem_ids() : std::vector<std::string>{theorem};
  std::size_t failures = 0, instances = 0;
  std::vector<std::string> vacuous;
  for (const auto& id : ids) {
    const auto report = verify(id, ws);
    failures += report.failure_count;
    instances += report.instances_checked;
    if (report.hypothesis_satisfied == 0) vacuous.push_back(id);
    if (json) *out << to_json(report).dump() << "\n";
    else *out << to_text(report);
    out.stream->flush();
  }
  if (json) {
    nlohmann::json summary = {{"theorems", ids.size()},
                              {"catalog_entries", ws.size()},
                              {"max_order", max_order},
                              {"instances_checked", instances},
                              {"failures", failures},
                              {"vacuous", vacuous},
                              {"notices", ws.catalog().notices}};
    *out << nlohmann::json{{"summary", summary}}.dump() << "\n";
  } else {
    for (const auto& n : ws.catalog().notices) *out << "notice: " << n << "\n";
    *out << "summary: " << ids.size() << " theorems, " << ws.size() << " catalog rings (max order " << max_order << "), "
         << instances << " instances, " << failures << " failures";
    if (!vacuous.empty()) {
      *out << ", vacuous:";
      for (const auto& v : vacuous) *out << " " << v;
    }
    *out << "\n";
  }
  return failures == 0 ? kOk : kFailure;
}

int search_cmd(const std::string& property, std::size_t max_order, const std::string& ring_spec, unsigned jobs,
               bool json, const std::string& out_path) {
  const auto query = Query::parse(property);
  Catalog catalog;
  if (!ring_spec.empty()) {
    catalog.entries.push_back(make_entry(parse_ring(ring_spec)));
  } else {
    catalog = build_catalog(CatalogConfig::for_max_order(max_order));
  }
  Workspace ws(std::move(catalog), jobs);
  const auto hits = search(query, ws);
  Output out(out_path);
  for (const auto& h : hits) {
    if (json) *out << to_json(h, ws).dump() << "\n";
    else *out << to_text(h, ws) << "\n";
  }
  if (!json) *out << hits.size() << " hits\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite commutative rings, expansion functions and 1-absorbing δ-primary ideals"};
  app.require_subcommand(1);

  unsigned jobs = 0;
  std::string out_path;
  app.add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");
  app.add_option("--out", out_path, "Write output to a file instead of stdout");

  std::string ring_spec, delta_spec, theorem, property;
  std::size_t max_order = default_max_order();
  bool json = false;

  auto* classify_app = app.add_subcommand("classify", "Evaluate every predicate on every proper ideal");
  classify_app->add_option("--ring", ring_spec, "Ring spec, e.g. Z36 or Z2[x]/(x^2)")->required();
  classify_app->add_option("--delta", delta_spec, "Expansion spec, e.g. id, rad, plus:(2)")->required();
  classify_app->add_flag("--json", json, "JSON lines output");
  classify_app->add_option("--jobs", jobs);
  classify_app->add_option("--out", out_path);

  auto* check_app = app.add_subcommand("check", "Verify theorems over the generated catalog");
  check_app->add_option("--theorem", theorem, "Theorem id or 'all'")->required();
  check_app->add_option("--max-order", max_order, "Largest base ring order")->check(CLI::Range(2, 64));
  check_app->add_flag("--json", json, "JSON lines output");
  check_app->add_option("--jobs", jobs);
  check_app->add_option("--out", out_path);

  auto* search_app = app.add_subcommand("search", "List (ring, ideal, δ) instances matching a predicate query");
  search_app->add_option("--property", property, "Query, e.g. \"1abs-delta-primary & !delta-primary\"")->required();
  search_app->add_option("--max-order", max_order, "Largest base ring order")->check(CLI::Range(2, 64));
  search_app->add_option("--ring", ring_spec, "Restrict the search to one ring spec");
  search_app->add_flag("--json", json, "JSON lines output");
  search_app->add_option("--jobs", jobs);
  search_app->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_app) return classify_cmd(ring_spec, delta_spec, json, out_path);
    if (*check_app) return check_cmd(theorem, max_order, jobs, json, out_path);
    if (*search_app) return search_cmd(property, max_order, ring_spec, jobs, json, out_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
