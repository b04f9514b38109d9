#pragma once

#include "element.hpp"
#include "term.hpp"

#include <map>
#include <string>

namespace qfiber {

using ElementAssignment = std::map<std::string, Element>;
using RationalAssignment = std::map<std::string, Rational>;

// Bottom-up evaluation over the full structure. Throws SemanticError on an
// unbound variable.
Element eval_term_m(const Term& t, const ElementAssignment& v);

// Classical satisfaction; psi(t) holds exactly when t evaluates to a parent
// point (every parent point has a child, so no witness search is needed).
bool eval_formula_m(const Formula& f, const ElementAssignment& v);

// Evaluation over the parent-line reduct (Q, F) with 0 and 1 read as the
// rationals 0 and 1.
Rational eval_term_q(const Term& t, const RationalAssignment& v);

}  // namespace qfiber
