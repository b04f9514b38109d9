#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace qfiber {

// Immutable term AST over the signature {f, 0, 1}. Terms are shared-node
// values; copies are cheap and all equality is structural.
class Term {
public:
  enum class Kind { Var, Zero, One, App };

  static Term var(std::string name);
  static Term zero();
  static Term one();
  static Term app(Term a, Term b, Term c);

  Kind kind() const { return node_->kind; }
  const std::string& name() const;       // Var only
  const Term& arg(std::size_t i) const;  // App only, i in 0..2

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

  std::string str() const;
  std::set<std::string> free_vars() const;
  void collect_free_vars(std::set<std::string>& out) const;

private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Quantifier-free formula AST, plus the one distinguished quantified
// formula psi(t), "t lies on the parent line".
class Formula {
public:
  enum class Kind { Eq, Rel, Psi, Not, And, Or };

  static Formula eq(Term lhs, Term rhs);
  static Formula rel(Term lhs, Term rhs);
  static Formula psi(Term t);
  static Formula negation(Formula f);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  const Term& term(std::size_t i) const;        // Eq/Rel: 0..1, Psi: 0
  const Formula& operand(std::size_t i) const;  // Not: 0, And/Or: 0..1

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  std::string str() const;
  std::set<std::string> free_vars() const;
  std::size_t atom_count() const;

private:
  struct Node {
    Kind kind;
    std::vector<Term> terms;
    std::vector<Formula> operands;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace qfiber
