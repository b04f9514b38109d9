#include "definability.hpp"

#include "errors.hpp"
#include "eval.hpp"
#include "parser.hpp"

#include <vector>

namespace qfiber {

namespace {

Term integer_iterate(const Int& n) {
  Term t = Term::zero();
  if (n >= 0) {
    for (Int i = 0; i < n; ++i) t = Term::app(Term::zero(), Term::one(), t);
  } else {
    for (Int i = 0; i < -n; ++i) t = Term::app(Term::one(), Term::zero(), t);
  }
  return t;
}

constexpr const char* kClosedTermKind = "closed-term";
constexpr const char* kUniqueSolutionKind = "unique-solution";

}  // namespace

std::string Certificate::machine_line() const {
  if (is_closed_term())
    return target.str() + "\t" + kClosedTermKind + "\t" + std::get<Term>(witness).str();
  return target.str() + "\t" + kUniqueSolutionKind + "\t" +
         std::get<UniqueSolutionWitness>(witness).formula.str();
}

Certificate Certificate::from_machine_line(std::string_view line) {
  const std::size_t tab1 = line.find('\t');
  const std::size_t tab2 = tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
  if (tab2 == std::string_view::npos || line.find('\t', tab2 + 1) != std::string_view::npos)
    throw ParseError("certificate line must have exactly three tab-separated fields");
  const Rational target = Rational::parse(line.substr(0, tab1));
  const std::string_view kind = line.substr(tab1 + 1, tab2 - tab1 - 1);
  const std::string_view text = line.substr(tab2 + 1);
  if (kind == kClosedTermKind) return Certificate{target, parse_term(text)};
  if (kind == kUniqueSolutionKind) {
    Formula f = parse_formula(text);
    auto vars = f.free_vars();
    if (vars.size() != 1)
      throw SemanticError("unique-solution certificate needs exactly one free variable");
    return Certificate{target, UniqueSolutionWitness{std::move(f), *vars.begin()}};
  }
  throw ParseError("unknown certificate kind '" + std::string(kind) + "'");
}

std::string Certificate::describe() const {
  if (is_closed_term())
    return std::get<Term>(witness).str() + " has value " + target.str();
  return std::get<UniqueSolutionWitness>(witness).formula.str() + " has unique solution " +
         target.str();
}

Certificate integer_certificate(const Int& n) {
  return Certificate{Rational(n), integer_iterate(n)};
}

Certificate rational_certificate(const Int& k, const Int& n) {
  if (n < 1) throw SemanticError("rational certificate needs a positive denominator");
  Term lhs = Term::zero();
  for (Int i = 0; i < n; ++i) lhs = Term::app(Term::zero(), Term::var("x"), lhs);
  Formula phi = Formula::eq(std::move(lhs), integer_iterate(k));
  return Certificate{Rational(k, n), UniqueSolutionWitness{std::move(phi), "x"}};
}

VerifyResult verify_certificate(const Certificate& c) {
  try {
    if (c.is_closed_term()) {
      const Term& t = std::get<Term>(c.witness);
      if (!t.free_vars().empty())
        return {false, "closed-term certificate has free variables"};
      const Rational value = eval_term_q(t, {});
      if (value != c.target)
        return {false,
                "term evaluates to " + value.str() + ", certificate claims " + c.target.str()};
      return {true, {}};
    }
    const auto& w = std::get<UniqueSolutionWitness>(c.witness);
    const SolutionSet solutions = classify_solutions(w.formula, w.variable, {});
    const SolutionSet expected = SolutionSet::finite({c.target});
    if (solutions != expected)
      return {false, "formula classifies as " + solutions.str() + ", certificate claims " +
                         expected.str()};
    return {true, {}};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

}  // namespace qfiber
