#include "textio.hpp"

#include "errors.hpp"

#include <cctype>

namespace qfiber {

namespace {
std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return s != "f" && s != "R" && s != "psi";
}
}  // namespace

std::vector<std::string> split_top_level(std::string_view text, char separator) {
  std::vector<std::string> pieces;
  if (trim(text).empty()) return pieces;
  int depth = 0;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == separator && depth == 0)) {
      std::string piece = trim(text.substr(begin, i - begin));
      if (piece.empty()) throw ParseError("empty entry in list", begin);
      pieces.push_back(std::move(piece));
      begin = i + 1;
      continue;
    }
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
  }
  return pieces;
}

namespace {
template <typename Value, typename Parse>
std::map<std::string, Value> parse_assignment(std::string_view text, Parse parse_value) {
  std::map<std::string, Value> bindings;
  for (const std::string& entry : split_top_level(text, ',')) {
    const std::size_t equals = entry.find('=');
    if (equals == std::string::npos)
      throw ParseError("assignment entry '" + entry + "' is not of the form name=value");
    const std::string name = trim(std::string_view(entry).substr(0, equals));
    if (!is_identifier(name))
      throw ParseError("'" + name + "' is not a valid variable name");
    if (bindings.count(name)) throw SemanticError("duplicate binding for '" + name + "'");
    bindings.emplace(name, parse_value(std::string_view(entry).substr(equals + 1)));
  }
  return bindings;
}
}  // namespace

ElementAssignment parse_element_assignment(std::string_view text) {
  return parse_assignment<Element>(text, [](std::string_view v) { return Element::parse(v); });
}

RationalAssignment parse_rational_assignment(std::string_view text) {
  return parse_assignment<Rational>(text,
                                    [](std::string_view v) { return Rational::parse(v); });
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (const std::string& entry : split_top_level(text, ',')) {
    out.push_back(Rational::parse(entry));
  }
  return out;
}

}  // namespace qfiber
