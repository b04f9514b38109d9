#pragma once

#include "term.hpp"

#include <string_view>

namespace qfiber {

// Concrete syntax (whitespace insignificant):
//   term    := "0" | "1" | ident | "f" "(" term "," term "," term ")"
//   atom    := term "=" term | "R" "(" term "," term ")" | "psi" "(" term ")"
//   formula := atom | "!" formula | formula "&" formula | formula "|" formula
//            | "(" formula ")"
//   ident   := letter { letter | digit }   -- excluding the keywords f, R, psi
// Precedence ! > & > |, with & and | left-associative.
Term parse_term(std::string_view text);
Formula parse_formula(std::string_view text);

}  // namespace qfiber
