#include "cpixp/format.hpp"

#include <boost/algorithm/string/trim.hpp>

#include "cpixp/errors.hpp"

namespace cpixp {

std::string to_string(const Theory& theory, Literal l) {
  const Feature& f = theory.feature(l.feature);
  return f.name + "=" + f.domain.at(l.value);
}

std::string to_string(const Theory& theory, const PartialAssignment& e) {
  std::string out = "{";
  bool first = true;
  for (const Literal& l : e) {
    if (!first) out += ", ";
    out += to_string(theory, l);
    first = false;
  }
  return out + "}";
}

std::string to_string(const Theory& theory, const Instance& x) {
  std::string out = "(";
  for (FeatureId f = 0; f < x.size(); ++f) {
    if (f > 0) out += ", ";
    out += theory.feature(f).domain.at(x[f]);
  }
  return out + ")";
}

Literal parse_literal(const Theory& theory, std::string_view text) {
  std::string item = boost::algorithm::trim_copy(std::string(text));
  auto eq = item.find('=');
  if (eq == std::string::npos) throw ParseError("expected name=value, got '" + item + "'", 0);
  std::string name = boost::algorithm::trim_copy(item.substr(0, eq));
  std::string token = boost::algorithm::trim_copy(item.substr(eq + 1));
  if (name.empty() || token.empty()) {
    throw ParseError("expected name=value, got '" + item + "'", name.empty() ? 0 : eq + 1);
  }
  auto f = theory.find_feature(name);
  if (!f) throw ParseError("unknown feature '" + name + "'", 0);
  auto v = theory.find_value(*f, token);
  if (!v) throw ParseError("unknown value '" + token + "' for feature '" + name + "'", eq + 1);
  return {*f, *v};
}

PartialAssignment parse_assignment(const Theory& theory, std::string_view text) {
  std::string body = boost::algorithm::trim_copy(std::string(text));
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw ParseError("unbalanced '{'", 0);
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Literal> literals;
  std::size_t start = 0;
  if (boost::algorithm::trim_copy(body).empty()) return {};
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    if (comma == std::string::npos) comma = body.size();
    try {
      literals.push_back(parse_literal(theory, std::string_view(body).substr(start, comma - start)));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start + e.position());
    }
    start = comma + 1;
  }
  return PartialAssignment(std::move(literals));
}

Instance parse_instance(const Theory& theory, std::string_view text) {
  PartialAssignment e = parse_assignment(theory, text);
  if (e.size() != theory.num_features()) {
    throw ParseError("instance must assign all " + std::to_string(theory.num_features()) +
                         " features, got " + std::to_string(e.size()),
                     0);
  }
  std::vector<ValueIndex> values;
  for (const Literal& l : e) values.push_back(l.value);
  return Instance(std::move(values));
}

PartialAssignment parse_literal_list(const Theory& theory, const std::vector<std::string>& items) {
  std::vector<Literal> literals;
  for (const std::string& item : items) literals.push_back(parse_literal(theory, item));
  return PartialAssignment(std::move(literals));
}

Instance instance_from_tokens(const Theory& theory, const std::vector<std::string>& tokens) {
  if (tokens.size() != theory.num_features()) {
    throw StructuralError("expected " + std::to_string(theory.num_features()) + " values, got " +
                          std::to_string(tokens.size()));
  }
  std::vector<ValueIndex> values;
  for (FeatureId f = 0; f < tokens.size(); ++f) {
    std::string token = boost::algorithm::trim_copy(tokens[f]);
    auto v = theory.find_value(f, token);
    if (!v) {
      throw StructuralError("unknown value '" + token + "' for feature '" +
                            theory.feature(f).name + "'");
    }
    values.push_back(*v);
  }
  return Instance(std::move(values));
}

}  // namespace cpixp
