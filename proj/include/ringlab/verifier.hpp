#pragma once

// Exhaustive verification of the theorem suite over a catalog, and witness search.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/catalog.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/query.hpp"

namespace ringlab {

struct Failure {
  std::string ring;
  std::vector<std::uint32_t> ideal;  // sorted member indices
  std::string ideal_text;
  std::string delta;
  std::vector<std::string> elements;
  std::string detail;
};

struct TheoremReport {
  std::string theorem_id;
  std::size_t instances_checked = 0;
  std::size_t hypothesis_satisfied = 0;
  std::size_t failure_count = 0;
  /// The first failures in catalog order (at most kMaxRecordedFailures).
  std::vector<Failure> conclusion_failures;
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  static constexpr std::size_t kMaxRecordedFailures = 25;

  /// "refuted" with failures, "vacuous" when no instance met the hypotheses,
  /// otherwise "verified".
  std::string status() const;
};

/// A catalog with one RingAnalysis per entry, shared by all theorem sweeps.
class Workspace {
 public:
  explicit Workspace(Catalog catalog, unsigned jobs = 0);

  const Catalog& catalog() const noexcept { return catalog_; }
  const CatalogEntry& entry(std::size_t i) const { return catalog_.entries[i]; }
  const RingAnalysis& analysis(std::size_t i) const { return *analyses_[i]; }
  std::size_t size() const noexcept { return catalog_.entries.size(); }
  unsigned jobs() const noexcept { return jobs_; }

 private:
  Catalog catalog_;
  std::vector<std::unique_ptr<RingAnalysis>> analyses_;
  unsigned jobs_;
};

/// Theorem ids in suite order.
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);

/// Throws PreconditionError for an unknown id.
TheoremReport verify(const std::string& theorem_id, const Workspace& workspace);

struct SearchHit {
  std::size_t entry = 0;
  std::size_t ideal = 0;
  std::optional<std::size_t> delta;  // index into the entry's expansions
};

/// Every (ring, ideal[, δ]) matching the query, in catalog order.
std::vector<SearchHit> search(const Query& query, const Workspace& workspace);

/// Ring is arithmetical: the localization at every maximal ideal is chained.
bool is_arithmetical(const RingPtr& ring);

}  // namespace ringlab
