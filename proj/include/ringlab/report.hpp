#pragma once

// Structured (JSON lines) and human-readable renderings of results.

#include <string>
#include <vector>

#include "json.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/verifier.hpp"

namespace ringlab {

nlohmann::json to_json(const TheoremReport& report);
/// Inverse of to_json; throws nlohmann::json exceptions on schema mismatch.
TheoremReport report_from_json(const nlohmann::json& j);
std::string to_text(const TheoremReport& report);

/// One record per proper ideal.
std::vector<nlohmann::json> classification_json(const RingAnalysis& analysis, const ExpansionFunction& delta,
                                                const std::vector<ClassificationRow>& rows);
std::string classification_table(const RingAnalysis& analysis, const ExpansionFunction& delta,
                                 const std::vector<ClassificationRow>& rows);

nlohmann::json to_json(const SearchHit& hit, const Workspace& workspace);
std::string to_text(const SearchHit& hit, const Workspace& workspace);

}  // namespace ringlab
