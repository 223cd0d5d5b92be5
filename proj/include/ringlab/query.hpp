#pragma once

// Boolean queries over predicate names:
//
//   expr   := and ('|' and)*
//   and    := unary ('&' unary)*
//   unary  := '!' unary | '(' expr ')' | name
//
// Names are the CLI predicate names (prime, 1abs-delta-primary, ...).

#include <functional>
#include <string>
#include <vector>

#include "ringlab/predicates.hpp"

namespace ringlab {

class Query {
 public:
  /// Throws ParseError with the offending position.
  static Query parse(const std::string& text);

  const std::string& text() const noexcept { return text_; }
  /// True if any referenced predicate depends on δ.
  bool depends_on_delta() const noexcept;
  const std::vector<Predicate>& predicates() const noexcept { return used_; }

  bool evaluate(const std::function<bool(Predicate)>& value) const;

 private:
  struct Node {
    enum class Op { Leaf, Not, And, Or } op;
    Predicate leaf = Predicate::Prime;
    int lhs = -1;
    int rhs = -1;
  };
  friend class QueryParser;

  bool eval(int node, const std::function<bool(Predicate)>& value) const;

  std::string text_;
  std::vector<Node> nodes_;
  int root_ = -1;
  std::vector<Predicate> used_;
};

}  // namespace ringlab
