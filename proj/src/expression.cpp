#include "cpixp/expression.hpp"

#include <cctype>

#include "cpixp/errors.hpp"

namespace cpixp {

class Expression::Parser {
 public:
  Parser(const Theory& theory, std::string_view text) : theory_(theory), text_(text) {}

  Node parse() {
    Node node = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression: " + what + " at position " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Node parse_or() {
    Node left = parse_and();
    if (!accept('|')) return left;
    Node node{Node::Op::kOr, {}, {std::move(left)}};
    do {
      node.children.push_back(parse_and());
    } while (accept('|'));
    return node;
  }

  Node parse_and() {
    Node left = parse_factor();
    if (!accept('&')) return left;
    Node node{Node::Op::kAnd, {}, {std::move(left)}};
    do {
      node.children.push_back(parse_factor());
    } while (accept('&'));
    return node;
  }

  Node parse_factor() {
    if (accept('!')) return Node{Node::Op::kNot, {}, {parse_factor()}};
    if (accept('(')) {
      Node inner = parse_or();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    std::size_t start = pos_;
    std::string_view name = word();
    if (name.empty()) fail("expected a feature name");
    auto f = theory_.find_feature(name);
    if (!f) {
      pos_ = start;
      skip_space();
      fail("unknown feature '" + std::string(name) + "'");
    }
    if (!accept('=')) fail("expected '='");
    std::size_t value_start = pos_;
    std::string_view token = word();
    if (token.empty()) fail("expected a value");
    auto v = theory_.find_value(*f, token);
    if (!v) {
      pos_ = value_start;
      skip_space();
      fail("unknown value '" + std::string(token) + "' for feature '" + std::string(name) + "'");
    }
    return Node{Node::Op::kAtom, Literal{*f, *v}, {}};
  }

  const Theory& theory_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

Expression Expression::parse(const Theory& theory, std::string_view text) {
  Expression e;
  e.root_ = std::make_shared<const Node>(Parser(theory, text).parse());
  e.text_ = std::string(text);
  return e;
}

bool Expression::evaluate(const Instance& x) const { return eval(*root_, x); }

bool Expression::eval(const Node& node, const Instance& x) {
  switch (node.op) {
    case Node::Op::kAtom:
      return x[node.atom.feature] == node.atom.value;
    case Node::Op::kNot:
      return !eval(node.children[0], x);
    case Node::Op::kAnd:
      for (const Node& c : node.children) {
        if (!eval(c, x)) return false;
      }
      return true;
    case Node::Op::kOr:
      for (const Node& c : node.children) {
        if (eval(c, x)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace cpixp
