#include "term.hpp"

#include <cassert>

namespace qfiber {

namespace {
// Connective binding strength; atoms never need parentheses.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or:
      return 1;
    case Formula::Kind::And:
      return 2;
    case Formula::Kind::Not:
      return 3;
    default:
      return 4;
  }
}
}  // namespace

Term Term::var(std::string name) {
  assert(!name.empty());
  return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}}));
}

Term Term::zero() {
  static const Term t(std::make_shared<const Node>(Node{Kind::Zero, {}, {}}));
  return t;
}

Term Term::one() {
  static const Term t(std::make_shared<const Node>(Node{Kind::One, {}, {}}));
  return t;
}

Term Term::app(Term a, Term b, Term c) {
  return Term(std::make_shared<const Node>(
      Node{Kind::App, {}, {std::move(a), std::move(b), std::move(c)}}));
}

const std::string& Term::name() const {
  assert(kind() == Kind::Var);
  return node_->name;
}

const Term& Term::arg(std::size_t i) const {
  assert(kind() == Kind::App && i < 3);
  return node_->args[i];
}

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Var:
      return node_->name == o.node_->name;
    case Kind::Zero:
    case Kind::One:
      return true;
    case Kind::App:
      return node_->args[0] == o.node_->args[0] && node_->args[1] == o.node_->args[1] &&
             node_->args[2] == o.node_->args[2];
  }
  return false;
}

std::string Term::str() const {
  switch (kind()) {
    case Kind::Var:
      return node_->name;
    case Kind::Zero:
      return "0";
    case Kind::One:
      return "1";
    case Kind::App:
      return "f(" + node_->args[0].str() + "," + node_->args[1].str() + "," +
             node_->args[2].str() + ")";
  }
  return {};
}

void Term::collect_free_vars(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Var:
      out.insert(node_->name);
      break;
    case Kind::App:
      for (const Term& t : node_->args) t.collect_free_vars(out);
      break;
    default:
      break;
  }
}

std::set<std::string> Term::free_vars() const {
  std::set<std::string> out;
  collect_free_vars(out);
  return out;
}

Formula Formula::eq(Term lhs, Term rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Eq, {std::move(lhs), std::move(rhs)}, {}}));
}

Formula Formula::rel(Term lhs, Term rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Rel, {std::move(lhs), std::move(rhs)}, {}}));
}

Formula Formula::psi(Term t) {
  return Formula(std::make_shared<const Node>(Node{Kind::Psi, {std::move(t)}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(f)}}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::And, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Or, {}, {std::move(lhs), std::move(rhs)}}));
}

const Term& Formula::term(std::size_t i) const {
  assert(i < node_->terms.size());
  return node_->terms[i];
}

const Formula& Formula::operand(std::size_t i) const {
  assert(i < node_->operands.size());
  return node_->operands[i];
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  if (node_->terms.size() != o.node_->terms.size() ||
      node_->operands.size() != o.node_->operands.size())
    return false;
  for (std::size_t i = 0; i < node_->terms.size(); ++i)
    if (node_->terms[i] != o.node_->terms[i]) return false;
  for (std::size_t i = 0; i < node_->operands.size(); ++i)
    if (node_->operands[i] != o.node_->operands[i]) return false;
  return true;
}

std::string Formula::str() const {
  switch (kind()) {
    case Kind::Eq:
      return node_->terms[0].str() + " = " + node_->terms[1].str();
    case Kind::Rel:
      return "R(" + node_->terms[0].str() + "," + node_->terms[1].str() + ")";
    case Kind::Psi:
      return "psi(" + node_->terms[0].str() + ")";
    case Kind::Not: {
      const Formula& sub = node_->operands[0];
      // "!x = 0" reparses fine but reads badly; keep atoms with '=' bracketed.
      const bool wrap = sub.kind() == Kind::Eq || precedence(sub.kind()) < precedence(Kind::Not);
      return wrap ? "!(" + sub.str() + ")" : "!" + sub.str();
    }
    case Kind::And:
    case Kind::Or: {
      const char* op = kind() == Kind::And ? " & " : " | ";
      const int self = precedence(kind());
      const Formula& lhs = node_->operands[0];
      const Formula& rhs = node_->operands[1];
      // Left-associative: equal precedence needs parentheses on the right only.
      std::string l = lhs.str();
      if (precedence(lhs.kind()) < self) l = "(" + l + ")";
      std::string r = rhs.str();
      if (precedence(rhs.kind()) <= self) r = "(" + r + ")";
      return l + op + r;
    }
  }
  return {};
}

std::set<std::string> Formula::free_vars() const {
  std::set<std::string> out;
  for (const Term& t : node_->terms) t.collect_free_vars(out);
  for (const Formula& f : node_->operands) {
    std::set<std::string> sub = f.free_vars();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::size_t Formula::atom_count() const {
  switch (kind()) {
    case Kind::Eq:
    case Kind::Rel:
    case Kind::Psi:
      return 1;
    case Kind::Not:
      return node_->operands[0].atom_count();
    case Kind::And:
    case Kind::Or:
      return node_->operands[0].atom_count() + node_->operands[1].atom_count();
  }
  return 0;
}

}  // namespace qfiber
