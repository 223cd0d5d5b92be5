#include "ringlab/catalog.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ringlab/errors.hpp"

namespace ringlab {

CatalogConfig CatalogConfig::for_max_order(std::size_t n) {
  if (n < 2) throw InvalidOrder("catalog max order must be at least 2");
  CatalogConfig c;
  c.max_order = n;
  c.max_product_order = std::min<std::size_t>(36, n * n);
  c.max_trivial_order = std::min<std::size_t>(64, n * n);
  c.max_quotient_parent_order = 2 * n;
  return c;
}

CatalogConfig CatalogConfig::base_only(std::size_t n) {
  CatalogConfig c = for_max_order(n);
  c.include_products = c.include_quotients = c.include_trivial_ext = c.include_localizations = false;
  return c;
}

std::optional<std::size_t> Catalog::find(const std::string& provenance) const {
  auto it = index_.find(provenance);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<long long> first_irreducible(long long p, std::size_t k) {
  if (!is_prime_number(p)) throw InvalidModulus("modulus " + std::to_string(p) + " is not prime");
  if (k == 0) throw InvalidPolynomial("degree must be positive");
  long long count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= p;
  for (long long v = 0; v < count; ++v) {
    std::vector<long long> coeffs(k + 1, 0);
    long long rest = v;
    for (std::size_t i = 0; i < k; ++i) {
      coeffs[i] = rest % p;
      rest /= p;
    }
    coeffs[k] = 1;
    if (is_field(*make_poly_quotient(p, coeffs))) return coeffs;
  }
  throw InvalidPolynomial("no irreducible polynomial found");
}

std::vector<BuiltPtr> base_rings(std::size_t max_order) {
  std::vector<BuiltPtr> out;
  for (std::size_t n = 2; n <= max_order; ++n) out.push_back(make_base(make_zn(static_cast<long long>(n))));
  std::vector<std::pair<long long, std::size_t>> powers;
  for (long long p = 2; static_cast<std::size_t>(p * p) <= max_order; ++p) {
    if (!is_prime_number(p)) continue;
    std::size_t k = 2;
    for (long long q = p * p; static_cast<std::size_t>(q) <= max_order; q *= p, ++k) powers.emplace_back(p, k);
  }
  for (auto [p, k] : powers) out.push_back(make_base(make_poly_quotient(p, first_irreducible(p, k))));
  for (auto [p, k] : powers) {
    std::vector<long long> xk(k + 1, 0);
    xk[k] = 1;
    out.push_back(make_base(make_poly_quotient(p, xk)));
  }
  return out;
}

void add_unique(std::vector<ExpansionFunction>& list, ExpansionFunction delta) {
  for (const auto& d : list)
    if (d.same_map(delta)) return;
  list.push_back(std::move(delta));
}

std::vector<ExpansionFunction> family_expansions(const RingPtr& ring) {
  std::vector<ExpansionFunction> out;
  add_unique(out, make_identity(ring));
  add_unique(out, make_radical(ring));
  add_unique(out, make_constant_ring(ring));
  const auto& lat = ring->lattice();
  for (auto j : lat.proper())
    if (j != lat.zero_index()) add_unique(out, make_plus_fixed(ring, lat[j]));
  return out;
}

namespace {

using Lookup = std::function<std::vector<ExpansionFunction>(const BuiltRing&)>;

std::vector<ExpansionFunction> with_induced(const BuiltRing& b, const Lookup& parent_expansions) {
  auto out = family_expansions(b.ring);
  switch (b.kind) {
    case BuiltRing::Kind::Base:
      break;
    case BuiltRing::Kind::Product: {
      const auto left = parent_expansions(*b.left);
      const auto right = parent_expansions(*b.right);
      for (const auto& d1 : left)
        for (const auto& d2 : right) add_unique(out, induced_product(d1, d2, *b.product));
      break;
    }
    case BuiltRing::Kind::Quotient:
      for (const auto& d : parent_expansions(*b.left)) add_unique(out, induced_quotient(d, *b.quotient));
      break;
    case BuiltRing::Kind::Localization:
      for (const auto& d : parent_expansions(*b.left)) add_unique(out, induced_localization(d, *b.localization).delta);
      break;
    case BuiltRing::Kind::Trivial:
      for (const auto& d : parent_expansions(*b.left)) add_unique(out, induced_trivial_extension(d, *b.trivial));
      break;
  }
  return out;
}

}  // namespace

std::vector<ExpansionFunction> expansions_for(const BuiltRing& ring) {
  return with_induced(ring, [](const BuiltRing& parent) { return expansions_for(parent); });
}

CatalogEntry make_entry(const BuiltPtr& ring) { return CatalogEntry{ring, expansions_for(*ring)}; }

Catalog build_catalog(const CatalogConfig& config) {
  if (config.max_order < 2) throw InvalidOrder("catalog max order must be at least 2");
  Catalog cat;
  cat.config = config;

  auto add = [&](const BuiltPtr& b) {
    if (cat.index_.count(b->provenance())) return;
    const Lookup lookup = [&](const BuiltRing& parent) {
      auto it = cat.index_.find(parent.provenance());
      if (it != cat.index_.end()) return cat.entries[it->second].expansions;
      return expansions_for(parent);
    };
    cat.index_.emplace(b->provenance(), cat.entries.size());
    cat.entries.push_back(CatalogEntry{b, with_induced(*b, lookup)});
  };

  const auto bases = base_rings(config.max_order);
  for (const auto& b : bases) add(b);

  std::vector<BuiltPtr> products;
  if (config.include_products) {
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < bases.size(); ++i)
      for (std::size_t j = i; j < bases.size(); ++j) {
        if (bases[i]->ring->order() * bases[j]->ring->order() > config.max_product_order) {
          ++skipped;
          continue;
        }
        products.push_back(build_product(bases[i], bases[j]));
        add(products.back());
      }
    if (skipped > 0)
      cat.notices.push_back("products: " + std::to_string(skipped) + " base pairs exceed order " +
                            std::to_string(config.max_product_order) + " and were skipped");
  }

  std::vector<BuiltPtr> trivials;
  if (config.include_trivial_ext) {
    std::size_t skipped = 0;
    for (const auto& a : bases) {
      const auto& A = a->ring;
      if (A->order() * A->order() <= config.max_trivial_order) {
        trivials.push_back(build_trivial(a, make_regular_module(A)));
        add(trivials.back());
      } else {
        ++skipped;
      }
      const auto& lat = A->lattice();
      for (auto j : lat.proper()) {
        if (j == lat.zero_index()) continue;
        const std::size_t quotient_order = A->order() / lat[j].size();
        if (A->order() * quotient_order > config.max_trivial_order) {
          ++skipped;
          continue;
        }
        trivials.push_back(build_trivial(a, make_quotient_module(A, lat[j])));
        add(trivials.back());
      }
    }
    if (skipped > 0)
      cat.notices.push_back("trivial extensions: " + std::to_string(skipped) + " candidates exceed order " +
                            std::to_string(config.max_trivial_order) + " and were skipped");
  }

  if (config.include_quotients) {
    std::size_t skipped = 0;
    std::vector<BuiltPtr> parents = bases;
    parents.insert(parents.end(), products.begin(), products.end());
    parents.insert(parents.end(), trivials.begin(), trivials.end());
    for (const auto& parent : parents) {
      const auto& R = parent->ring;
      if (R->order() > config.max_quotient_parent_order) {
        ++skipped;
        continue;
      }
      const auto& lat = R->lattice();
      std::set<std::size_t> seen;
      for (std::uint32_t g = 0; g < R->order(); ++g) {
        const auto k = lat.principal(g);
        if (k == lat.zero_index() || k == lat.whole_index() || !seen.insert(k).second) continue;
        add(build_quotient(parent, lat[k]));
      }
    }
    if (skipped > 0)
      cat.notices.push_back("quotients: " + std::to_string(skipped) + " parent rings exceed order " +
                            std::to_string(config.max_quotient_parent_order) + " and were skipped");
  }

  if (config.include_localizations) {
    std::vector<BuiltPtr> parents = bases;
    parents.insert(parents.end(), products.begin(), products.end());
    for (const auto& parent : parents) {
      const auto& R = parent->ring;
      std::vector<MultiplicativeSet> sets;
      auto consider = [&](MultiplicativeSet s) {
        if (s.members.is_subset_of(R->unit_set())) return;
        for (const auto& t : sets)
          if (t.members == s.members) return;
        sets.push_back(std::move(s));
      };
      for (const auto& P : spectrum(*R)) consider(MultiplicativeSet::complement_of_prime(R, P));
      const Ideal nil = radical(zero_ideal(*R));
      for (auto s : R->nonunit_list())
        if (!nil.contains(Element{s})) consider(MultiplicativeSet::generated_by(R, {Element{s}}));
      for (const auto& s : sets) add(build_localization(parent, s));
    }
  }
  return cat;
}

}  // namespace ringlab
