#include "ringlab/report.hpp"

#include <iomanip>
#include <sstream>

namespace ringlab {

namespace {

std::vector<std::string> names(const FiniteRing& ring, const std::vector<Element>& els) {
  std::vector<std::string> out;
  for (auto e : els) out.push_back(ring.name(e));
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.conclusion_failures)
    failures.push_back({{"ring", f.ring},
                        {"ideal", f.ideal},
                        {"ideal_text", f.ideal_text},
                        {"delta", f.delta},
                        {"elements", f.elements},
                        {"detail", f.detail}});
  return {{"theorem_id", r.theorem_id},
          {"status", r.status()},
          {"instances_checked", r.instances_checked},
          {"hypothesis_satisfied", r.hypothesis_satisfied},
          {"failure_count", r.failure_count},
          {"conclusion_failures", failures},
          {"notes", r.notes},
          {"elapsed_ms", r.elapsed_ms}};
}

TheoremReport report_from_json(const nlohmann::json& j) {
  TheoremReport r;
  r.theorem_id = j.at("theorem_id").get<std::string>();
  r.instances_checked = j.at("instances_checked").get<std::size_t>();
  r.hypothesis_satisfied = j.at("hypothesis_satisfied").get<std::size_t>();
  r.failure_count = j.at("failure_count").get<std::size_t>();
  for (const auto& f : j.at("conclusion_failures"))
    r.conclusion_failures.push_back(Failure{f.at("ring").get<std::string>(), f.at("ideal").get<std::vector<std::uint32_t>>(),
                                            f.at("ideal_text").get<std::string>(), f.at("delta").get<std::string>(),
                                            f.at("elements").get<std::vector<std::string>>(),
                                            f.at("detail").get<std::string>()});
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

std::string to_text(const TheoremReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(11) << r.theorem_id << " " << std::setw(8) << r.status() << " instances=" << r.instances_checked
      << " hypothesis=" << r.hypothesis_satisfied << " failures=" << r.failure_count << " (" << std::fixed
      << std::setprecision(1) << r.elapsed_ms << " ms)\n";
  for (const auto& f : r.conclusion_failures)
    out << "    FAIL " << f.ring << " I=" << f.ideal_text << " δ=" << f.delta << " [" << join(f.elements, ",") << "] "
        << f.detail << "\n";
  for (const auto& n : r.notes) out << "    note: " << n << "\n";
  return out.str();
}

std::vector<nlohmann::json> classification_json(const RingAnalysis& analysis, const ExpansionFunction& delta,
                                                const std::vector<ClassificationRow>& rows) {
  const auto& L = analysis.lattice();
  const auto& R = analysis.ring();
  std::vector<nlohmann::json> out;
  for (const auto& row : rows) {
    nlohmann::json preds = nlohmann::json::object();
    for (std::size_t k = 0; k < kAllPredicates.size(); ++k) {
      const auto& v = row.values[k];
      nlohmann::json rec = {{"holds", v.holds}};
      if (!v.holds) rec["witness"] = names(R, v.witness);
      preds[std::string(predicate_name(kAllPredicates[k]))] = rec;
    }
    out.push_back({{"ring", R.label()},
                   {"delta", delta.label()},
                   {"ideal", L[row.ideal].member_list()},
                   {"ideal_text", L[row.ideal].to_string()},
                   {"delta_ideal", L[row.expanded].to_string()},
                   {"predicates", preds}});
  }
  return out;
}

std::string classification_table(const RingAnalysis& analysis, const ExpansionFunction& delta,
                                 const std::vector<ClassificationRow>& rows) {
  const auto& L = analysis.lattice();
  const auto& R = analysis.ring();
  std::ostringstream out;
  out << R.label() << " with δ=" << delta.label() << " (" << rows.size() << " proper ideals)\n";
  for (const auto& row : rows) {
    out << "  I=" << L[row.ideal].to_string() << "  δ(I)=" << L[row.expanded].to_string() << "\n";
    for (std::size_t k = 0; k < kAllPredicates.size(); ++k) {
      const auto& v = row.values[k];
      out << "    " << std::left << std::setw(20) << predicate_name(kAllPredicates[k]) << (v.holds ? "yes" : "no");
      if (!v.holds && !v.witness.empty()) out << "  witness " << join(names(R, v.witness), ",");
      out << "\n";
    }
  }
  return out.str();
}

nlohmann::json to_json(const SearchHit& hit, const Workspace& ws) {
  const auto& e = ws.entry(hit.entry);
  const auto& L = ws.analysis(hit.entry).lattice();
  nlohmann::json j = {{"ring", e.provenance()},
                      {"ideal", L[hit.ideal].member_list()},
                      {"ideal_text", L[hit.ideal].to_string()},
                      {"local", ws.analysis(hit.entry).is_local()}};
  if (hit.delta) j["delta"] = e.expansions[*hit.delta].label();
  return j;
}

std::string to_text(const SearchHit& hit, const Workspace& ws) {
  const auto& e = ws.entry(hit.entry);
  const auto& L = ws.analysis(hit.entry).lattice();
  std::string s = e.provenance() + "  I=" + L[hit.ideal].to_string();
  if (hit.delta) s += "  δ=" + e.expansions[*hit.delta].label();
  return s;
}

}  // namespace ringlab
