#pragma once

#include "eval.hpp"
#include "term.hpp"

#include <map>
#include <string>
#include <vector>

namespace qfiber {

// Integer-coefficient affine combination of atoms. Atoms are variable names
// plus the two constant atoms "@0" and "@1"; zero coefficients are never
// stored. Forms produced from terms have coefficient sum 1.
class AffineForm {
public:
  static constexpr const char* kZeroAtom = "@0";
  static constexpr const char* kOneAtom = "@1";

  using Map = std::map<std::string, Int>;

  AffineForm() = default;
  explicit AffineForm(Map coeffs);

  const Map& coefficients() const { return coeffs_; }
  Int coefficient(const std::string& atom) const;
  Int coefficient_sum() const;
  bool empty() const { return coeffs_.empty(); }

  friend AffineForm operator+(const AffineForm& a, const AffineForm& b);
  friend AffineForm operator-(const AffineForm& a, const AffineForm& b);
  bool operator==(const AffineForm& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const AffineForm& o) const { return !(*this == o); }

  // "-1*@1 + 2*x": atoms in map order (@0, @1, then variables), empty form
  // prints as "0".
  std::string str() const;

private:
  Map coeffs_;
};

// Affine normal form of an {f,0,1}-term: Var x -> {x:1}, 0 -> {@0:1},
// 1 -> {@1:1}, f(a,b,c) -> form(b) - form(a) + form(c).
AffineForm normalize_term(const Term& t);

// Value of a form at a rational assignment; @0 and @1 are fixed to 0 and 1.
Rational affine_eval(const AffineForm& form, const RationalAssignment& v);

// Difference of the two term forms of an equality atom; coefficients sum to 0.
struct LinearEquation {
  AffineForm diff;
};
LinearEquation equation_of(const Formula& eq);

// Finite or cofinite set of rationals with the listed side sorted and
// duplicate-free. Exactly closed under complement, union, intersection.
class SolutionSet {
public:
  static SolutionSet finite(std::vector<Rational> points);
  static SolutionSet cofinite(std::vector<Rational> excluded);
  static SolutionSet all() { return cofinite({}); }
  static SolutionSet none() { return finite({}); }

  bool is_finite() const { return !cofinite_; }
  const std::vector<Rational>& listed() const { return points_; }

  bool contains(const Rational& x) const;
  SolutionSet complement() const;
  SolutionSet intersect(const SolutionSet& o) const;
  SolutionSet unite(const SolutionSet& o) const;

  bool operator==(const SolutionSet& o) const {
    return cofinite_ == o.cofinite_ && points_ == o.points_;
  }
  bool operator!=(const SolutionSet& o) const { return !(*this == o); }

  std::string str() const;  // "finite {1/2}" / "cofinite {0, 1}"

private:
  SolutionSet(bool cofinite, std::vector<Rational> points);
  bool cofinite_ = false;
  std::vector<Rational> points_;
};

// Exact solution set of a quantifier-free, R-free, psi-free formula in the
// target variable, all other free variables bound in params. Each atom
// contributes all of Q, the empty set, or one point; the boolean structure
// is evaluated by set algebra, so the listed side never exceeds the atom
// count of the formula.
SolutionSet classify_solutions(const Formula& f, const std::string& target,
                               const RationalAssignment& params);

}  // namespace qfiber
