#pragma once

#include "affine.hpp"
#include "term.hpp"

#include <string>
#include <variant>

namespace qfiber {

// A mechanically checkable witness that a target rational is definable over
// {0,1} in the parent-line reduct: either a closed term with that value, or
// a one-variable formula whose solution set is exactly that one point.
struct UniqueSolutionWitness {
  Formula formula;
  std::string variable;
};

struct Certificate {
  Rational target;
  std::variant<Term, UniqueSolutionWitness> witness;

  bool is_closed_term() const { return std::holds_alternative<Term>(witness); }

  // One-line interchange format: "TARGET<tab>KIND<tab>TEXT" with KIND one of
  // "closed-term" / "unique-solution".
  std::string machine_line() const;
  static Certificate from_machine_line(std::string_view line);

  // Human-readable sentence: "<text> has value t" / "<text> has unique solution t".
  std::string describe() const;
};

// n >= 0: the n-fold iterate of f(0,1,.) on 0; n < 0: the |n|-fold iterate
// of f(1,0,.) on 0. Iterates are right-associated.
Certificate integer_certificate(const Int& n);

// k/n (n >= 1) as the unique x with the n-fold f(0,x,.) iterate of 0 equal
// to the integer certificate term for k.
Certificate rational_certificate(const Int& k, const Int& n);

struct VerifyResult {
  bool ok;
  std::string diagnostic;  // empty on success
};

// Re-derives the certificate's claim from scratch: closed terms are evaluated
// over (Q,F), unique-solution formulas are classified. Never throws; failures
// come back as diagnostics.
VerifyResult verify_certificate(const Certificate& c);

}  // namespace qfiber
