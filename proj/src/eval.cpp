#include "eval.hpp"

#include "errors.hpp"

namespace qfiber {

Element eval_term_m(const Term& t, const ElementAssignment& v) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = v.find(t.name());
      if (it == v.end()) throw SemanticError("unbound variable '" + t.name() + "'");
      return it->second;
    }
    case Term::Kind::Zero:
      return interp_zero();
    case Term::Kind::One:
      return interp_one();
    case Term::Kind::App:
      return interp_f(eval_term_m(t.arg(0), v), eval_term_m(t.arg(1), v),
                      eval_term_m(t.arg(2), v));
  }
  throw SemanticError("unreachable term kind");
}

bool eval_formula_m(const Formula& f, const ElementAssignment& v) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return eval_term_m(f.term(0), v) == eval_term_m(f.term(1), v);
    case Formula::Kind::Rel:
      return interp_R(eval_term_m(f.term(0), v), eval_term_m(f.term(1), v));
    case Formula::Kind::Psi:
      return eval_term_m(f.term(0), v).is_parent();
    case Formula::Kind::Not:
      return !eval_formula_m(f.operand(0), v);
    case Formula::Kind::And:
      return eval_formula_m(f.operand(0), v) && eval_formula_m(f.operand(1), v);
    case Formula::Kind::Or:
      return eval_formula_m(f.operand(0), v) || eval_formula_m(f.operand(1), v);
  }
  throw SemanticError("unreachable formula kind");
}

Rational eval_term_q(const Term& t, const RationalAssignment& v) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = v.find(t.name());
      if (it == v.end()) throw SemanticError("unbound variable '" + t.name() + "'");
      return it->second;
    }
    case Term::Kind::Zero:
      return Rational(0);
    case Term::Kind::One:
      return Rational(1);
    case Term::Kind::App:
      return eval_F(eval_term_q(t.arg(0), v), eval_term_q(t.arg(1), v),
                    eval_term_q(t.arg(2), v));
  }
  throw SemanticError("unreachable term kind");
}

}  // namespace qfiber
