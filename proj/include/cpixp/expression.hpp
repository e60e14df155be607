#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cpixp/theory.hpp"

namespace cpixp {

// Boolean formula over `name=token` atoms.
//
//   expr   := term ('|' term)*
//   term   := factor ('&' factor)*
//   factor := '!' factor | '(' expr ')' | NAME '=' TOKEN
class Expression {
 public:
  // Throws ParseError on bad syntax, unknown features or unknown values.
  static Expression parse(const Theory& theory, std::string_view text);

  bool evaluate(const Instance& x) const;
  const std::string& text() const { return text_; }

 private:
  struct Node {
    enum class Op { kAtom, kNot, kAnd, kOr } op = Op::kAtom;
    Literal atom;
    std::vector<Node> children;
  };
  class Parser;

  static bool eval(const Node& node, const Instance& x);

  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace cpixp
