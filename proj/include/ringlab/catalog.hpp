#pragma once

// Deterministic catalog of small rings paired with expansion functions.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/expansion.hpp"
#include "ringlab/ring_spec.hpp"

namespace ringlab {

struct CatalogConfig {
  std::size_t max_order = 16;          // base rings
  std::size_t max_product_order = 36;  // direct products of two base rings
  std::size_t max_trivial_order = 64;  // trivial extensions A⋉E
  std::size_t max_quotient_parent_order = 32;
  bool include_products = true;
  bool include_quotients = true;
  bool include_trivial_ext = true;
  bool include_localizations = true;

  /// Default budgets scaled to a base order: products and trivial extensions
  /// up to min(36, n²) and min(64, n²), quotient parents up to 2n.
  static CatalogConfig for_max_order(std::size_t n);
  static CatalogConfig base_only(std::size_t n);
};

struct CatalogEntry {
  BuiltPtr built;
  std::vector<ExpansionFunction> expansions;

  const RingPtr& ring() const { return built->ring; }
  const std::string& provenance() const { return built->provenance(); }
};

struct Catalog {
  CatalogConfig config;
  std::vector<CatalogEntry> entries;
  /// Truncation notices and similar remarks.
  std::vector<std::string> notices;

  std::optional<std::size_t> find(const std::string& provenance) const;

 private:
  friend Catalog build_catalog(const CatalogConfig& config);
  std::map<std::string, std::size_t> index_;
};

/// Z2..Zn, then each field F_{p^k} (first irreducible monic polynomial) and each
/// chained ring Zp[x]/(x^k) with 2 <= k and p^k <= n.
std::vector<BuiltPtr> base_rings(std::size_t max_order);

/// Smallest irreducible monic polynomial of degree k over Z_p (coefficients
/// low-to-high, ordered by the base-p value of the non-leading coefficients).
std::vector<long long> first_irreducible(long long p, std::size_t k);

/// id, rad, full and plus:(J) for every nonzero proper J, deduplicated by table.
std::vector<ExpansionFunction> family_expansions(const RingPtr& ring);

/// Families plus the expansions induced from the construction's operands
/// (computed recursively), deduplicated by table.
std::vector<ExpansionFunction> expansions_for(const BuiltRing& ring);

/// Appends unless an expansion with the same table is already present.
void add_unique(std::vector<ExpansionFunction>& list, ExpansionFunction delta);

Catalog build_catalog(const CatalogConfig& config);

/// Catalog entry for a single parsed ring (used when the CLI restricts to one ring).
CatalogEntry make_entry(const BuiltPtr& ring);

}  // namespace ringlab
