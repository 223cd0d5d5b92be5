#pragma once

// Parsers for the ring-spec and expansion-spec mini-languages.
//
//   spec    := term ('x' term)*                      left-associative product
//   term    := atom ('/' '(' gens ')')*              quotient by the ideal the gens span
//   atom    := 'Z' int
//            | 'Z' int '[x]/(' poly ')'              p prime, poly monic
//            | 'triv(' spec ',' module ')'           module := 'reg' | 'quot:(' gens ')'
//            | 'loc(' spec ',' gens ')'              S generated by gens
//            | '(' spec ')'
//   gens    := element (',' element)*                element names as printed, or integers
//
//   delta   := 'id' | 'rad' | 'full' | 'plus:(' gens ')'
//            | 'prod(' delta ',' delta ')'           on a product ring
//            | 'bar(' delta [',' '(' gens ')'] ')'   on a quotient ring
//            | 'loc(' delta [',' gens] ')'           on a localization
//            | 'triv(' delta ')'                     on a trivial extension
//
// Whitespace is ignored everywhere.

#include <memory>
#include <optional>
#include <string>

#include "ringlab/constructions.hpp"
#include "ringlab/expansion.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct BuiltRing;
using BuiltPtr = std::shared_ptr<const BuiltRing>;

/// A ring together with the construction that produced it.
struct BuiltRing {
  enum class Kind { Base, Product, Quotient, Trivial, Localization };

  Kind kind = Kind::Base;
  RingPtr ring;
  BuiltPtr left;   // factor, parent or base ring
  BuiltPtr right;  // second factor of a product

  std::optional<ProductRing> product;
  std::optional<QuotientRing> quotient;
  std::optional<TrivialExtension> trivial;
  std::optional<Localization> localization;

  /// The construction expression; re-parses to identical tables.
  const std::string& provenance() const { return ring->label(); }
};

BuiltPtr make_base(RingPtr ring);
BuiltPtr build_product(const BuiltPtr& left, const BuiltPtr& right);
BuiltPtr build_quotient(const BuiltPtr& parent, const Ideal& ideal);
BuiltPtr build_trivial(const BuiltPtr& base, const ModulePtr& module);
BuiltPtr build_localization(const BuiltPtr& parent, const MultiplicativeSet& set);

/// Throws ParseError (with position) on syntax errors and the construction's
/// own error type when the parsed ring is invalid.
BuiltPtr parse_ring(const std::string& text);

/// Polynomial over Z_p in x, low-to-high coefficients, e.g. "x^2+x+1" -> {1,1,1}.
std::vector<long long> parse_polynomial(const std::string& text);

ExpansionFunction parse_expansion(const std::string& text, const BuiltRing& ring);

}  // namespace ringlab
