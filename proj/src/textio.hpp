#pragma once

#include "eval.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qfiber {

// Splits on a separator outside parentheses, trimming each piece. Empty or
// all-whitespace input yields no pieces; an empty piece between separators
// is a parse error.
std::vector<std::string> split_top_level(std::string_view text, char separator);

// "x=P(0),y=C(0,1)" with Element values.
ElementAssignment parse_element_assignment(std::string_view text);

// "x=1/2,y=-3" with Rational values.
RationalAssignment parse_rational_assignment(std::string_view text);

// "0, 1, -1/2"
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace qfiber
