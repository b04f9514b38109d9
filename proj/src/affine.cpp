#include "affine.hpp"

#include "errors.hpp"

#include <algorithm>

namespace qfiber {

AffineForm::AffineForm(Map coeffs) : coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

Int AffineForm::coefficient(const std::string& atom) const {
  auto it = coeffs_.find(atom);
  return it == coeffs_.end() ? Int(0) : it->second;
}

Int AffineForm::coefficient_sum() const {
  Int sum = 0;
  for (const auto& [atom, c] : coeffs_) sum += c;
  return sum;
}

namespace {
void accumulate(AffineForm::Map& acc, const AffineForm& form, int sign) {
  for (const auto& [atom, c] : form.coefficients()) {
    Int& slot = acc[atom];
    slot += sign > 0 ? c : -c;
    if (slot == 0) acc.erase(atom);
  }
}
}  // namespace

AffineForm operator+(const AffineForm& a, const AffineForm& b) {
  AffineForm::Map acc = a.coefficients();
  accumulate(acc, b, +1);
  return AffineForm(std::move(acc));
}

AffineForm operator-(const AffineForm& a, const AffineForm& b) {
  AffineForm::Map acc = a.coefficients();
  accumulate(acc, b, -1);
  return AffineForm(std::move(acc));
}

std::string AffineForm::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [atom, c] : coeffs_) {
    const bool negative = c < 0;
    const Int magnitude = negative ? Int(-c) : c;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    out += magnitude.str();
    out += '*';
    out += atom;
  }
  return out;
}

namespace {
// form(f(a,b,c)) = form(b) - form(a) + form(c), done in one accumulator pass.
void normalize_into(AffineForm::Map& acc, const Term& t, int sign) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      Int& slot = acc[t.name()];
      slot += sign;
      if (slot == 0) acc.erase(t.name());
      return;
    }
    case Term::Kind::Zero: {
      Int& slot = acc[AffineForm::kZeroAtom];
      slot += sign;
      if (slot == 0) acc.erase(AffineForm::kZeroAtom);
      return;
    }
    case Term::Kind::One: {
      Int& slot = acc[AffineForm::kOneAtom];
      slot += sign;
      if (slot == 0) acc.erase(AffineForm::kOneAtom);
      return;
    }
    case Term::Kind::App:
      normalize_into(acc, t.arg(0), -sign);
      normalize_into(acc, t.arg(1), sign);
      normalize_into(acc, t.arg(2), sign);
      return;
  }
}
}  // namespace

AffineForm normalize_term(const Term& t) {
  AffineForm::Map acc;
  normalize_into(acc, t, +1);
  return AffineForm(std::move(acc));
}

Rational affine_eval(const AffineForm& form, const RationalAssignment& v) {
  Rational total(0);
  for (const auto& [atom, c] : form.coefficients()) {
    if (atom == AffineForm::kZeroAtom) continue;
    if (atom == AffineForm::kOneAtom) {
      total += Rational(c);
      continue;
    }
    auto it = v.find(atom);
    if (it == v.end()) throw SemanticError("unbound variable '" + atom + "'");
    total += Rational(c) * it->second;
  }
  return total;
}

LinearEquation equation_of(const Formula& eq) {
  if (eq.kind() != Formula::Kind::Eq)
    throw SemanticError("equation_of expects an equality atom");
  return LinearEquation{normalize_term(eq.term(0)) - normalize_term(eq.term(1))};
}

SolutionSet::SolutionSet(bool cofinite, std::vector<Rational> points)
    : cofinite_(cofinite), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

SolutionSet SolutionSet::finite(std::vector<Rational> points) {
  return SolutionSet(false, std::move(points));
}

SolutionSet SolutionSet::cofinite(std::vector<Rational> excluded) {
  return SolutionSet(true, std::move(excluded));
}

bool SolutionSet::contains(const Rational& x) const {
  const bool listed = std::binary_search(points_.begin(), points_.end(), x);
  return cofinite_ ? !listed : listed;
}

SolutionSet SolutionSet::complement() const { return SolutionSet(!cofinite_, points_); }

namespace {
std::vector<Rational> merge_union(const std::vector<Rational>& a,
                                  const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Rational> merge_intersection(const std::vector<Rational>& a,
                                         const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Rational> merge_difference(const std::vector<Rational>& a,
                                       const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
}  // namespace

SolutionSet SolutionSet::intersect(const SolutionSet& o) const {
  if (is_finite() && o.is_finite()) return finite(merge_intersection(points_, o.points_));
  if (is_finite()) return finite(merge_difference(points_, o.points_));
  if (o.is_finite()) return finite(merge_difference(o.points_, points_));
  return cofinite(merge_union(points_, o.points_));
}

SolutionSet SolutionSet::unite(const SolutionSet& o) const {
  return complement().intersect(o.complement()).complement();
}

std::string SolutionSet::str() const {
  std::string out = cofinite_ ? "cofinite {" : "finite {";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out += ", ";
    out += points_[i].str();
  }
  out += '}';
  return out;
}

namespace {
// One equality atom in the target variable: a*x + c = 0 with integer a and
// rational c assembled from the equation's parameters.
SolutionSet classify_atom(const Formula& eq, const std::string& target,
                          const RationalAssignment& params) {
  const LinearEquation equation = equation_of(eq);
  Int a = 0;
  Rational c(0);
  for (const auto& [atom, coef] : equation.diff.coefficients()) {
    if (atom == target) {
      a = coef;
    } else if (atom == AffineForm::kZeroAtom) {
      // contributes coef * 0
    } else if (atom == AffineForm::kOneAtom) {
      c += Rational(coef);
    } else {
      auto it = params.find(atom);
      if (it == params.end()) throw SemanticError("unbound parameter '" + atom + "'");
      c += Rational(coef) * it->second;
    }
  }
  if (a == 0) return c.is_zero() ? SolutionSet::all() : SolutionSet::none();
  return SolutionSet::finite({-c / Rational(a)});
}
}  // namespace

SolutionSet classify_solutions(const Formula& f, const std::string& target,
                               const RationalAssignment& params) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return classify_atom(f, target, params);
    case Formula::Kind::Rel:
      throw SemanticError("classification handles the parent-line reduct only; R is not allowed");
    case Formula::Kind::Psi:
      throw SemanticError(
          "classification handles the parent-line reduct only; psi is not allowed");
    case Formula::Kind::Not:
      return classify_solutions(f.operand(0), target, params).complement();
    case Formula::Kind::And:
      return classify_solutions(f.operand(0), target, params)
          .intersect(classify_solutions(f.operand(1), target, params));
    case Formula::Kind::Or:
      return classify_solutions(f.operand(0), target, params)
          .unite(classify_solutions(f.operand(1), target, params));
  }
  throw SemanticError("unreachable formula kind");
}

}  // namespace qfiber
