#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cpixp/theory.hpp"

namespace cpixp {

// "f1=1"
std::string to_string(const Theory& theory, Literal l);
// "{f1=1, f2=0}", literals in canonical order; "{}" for the empty set.
std::string to_string(const Theory& theory, const PartialAssignment& e);
// "(1, 0)" using domain tokens.
std::string to_string(const Theory& theory, const Instance& x);

// Parses "name=token" into a literal. Throws ParseError.
Literal parse_literal(const Theory& theory, std::string_view text);

// Parses a comma separated literal list such as "f1=1,f2=0"; braces and
// surrounding whitespace are accepted. Throws ParseError or StructuralError.
PartialAssignment parse_assignment(const Theory& theory, std::string_view text);

// Literal list assigning every feature. Throws ParseError when incomplete.
Instance parse_instance(const Theory& theory, std::string_view text);

PartialAssignment parse_literal_list(const Theory& theory, const std::vector<std::string>& items);

// Instance from a list of domain tokens in feature order.
Instance instance_from_tokens(const Theory& theory, const std::vector<std::string>& tokens);

}  // namespace cpixp
