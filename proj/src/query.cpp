#include "ringlab/query.hpp"

#include <algorithm>
#include <cctype>

#include "ringlab/errors.hpp"

namespace ringlab {

class QueryParser {
 public:
  QueryParser(const std::string& text, Query& q) : text_(text), q_(q) {}

  int parse() {
    const int root = expr();
    skip();
    if (pos_ < text_.size()) throw ParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int add(Query::Node n) {
    q_.nodes_.push_back(n);
    return static_cast<int>(q_.nodes_.size()) - 1;
  }

  int expr() {
    int lhs = conj();
    while (accept('|')) lhs = add({Query::Node::Op::Or, Predicate::Prime, lhs, conj()});
    return lhs;
  }
  int conj() {
    int lhs = unary();
    while (accept('&')) lhs = add({Query::Node::Op::And, Predicate::Prime, lhs, unary()});
    return lhs;
  }
  int unary() {
    if (accept('!')) return add({Query::Node::Op::Not, Predicate::Prime, unary(), -1});
    if (accept('(')) {
      const int inner = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) ++pos_;
    if (start == pos_) {
      if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of query");
      throw ParseError(pos_, "expected a predicate name, '!' or '('");
    }
    const std::string name = text_.substr(start, pos_ - start);
    const auto p = parse_predicate(name);
    if (!p) throw ParseError(start, "unknown predicate '" + name + "'");
    if (std::find(q_.used_.begin(), q_.used_.end(), *p) == q_.used_.end()) q_.used_.push_back(*p);
    return add({Query::Node::Op::Leaf, *p, -1, -1});
  }

  const std::string& text_;
  Query& q_;
  std::size_t pos_ = 0;
};

Query Query::parse(const std::string& text) {
  Query q;
  q.text_ = text;
  QueryParser parser(q.text_, q);
  q.root_ = parser.parse();
  return q;
}

bool Query::depends_on_delta() const noexcept {
  return std::any_of(used_.begin(), used_.end(), [](Predicate p) { return ringlab::depends_on_delta(p); });
}

bool Query::evaluate(const std::function<bool(Predicate)>& value) const { return eval(root_, value); }

bool Query::eval(int node, const std::function<bool(Predicate)>& value) const {
  const Node& n = nodes_[static_cast<std::size_t>(node)];
  switch (n.op) {
    case Node::Op::Leaf: return value(n.leaf);
    case Node::Op::Not: return !eval(n.lhs, value);
    case Node::Op::And: return eval(n.lhs, value) && eval(n.rhs, value);
    case Node::Op::Or: return eval(n.lhs, value) || eval(n.rhs, value);
  }
  return false;
}

}  // namespace ringlab
