#pragma once

#include "check.hpp"
#include "element.hpp"

#include <functional>
#include <vector>

namespace qfiber {

// An automorphism of the parent-line reduct (Q,F): x -> slope*x + intercept
// with nonzero slope. These are exactly the maps determined by the images of
// 0 and 1, and every one of them preserves F.
class ParentAffineMap {
public:
  ParentAffineMap(Rational slope, Rational intercept);  // throws on slope = 0

  static ParentAffineMap identity() { return {Rational(1), Rational(0)}; }

  const Rational& slope() const { return slope_; }
  const Rational& intercept() const { return intercept_; }

  Rational operator()(const Rational& x) const { return slope_ * x + intercept_; }
  ParentAffineMap after(const ParentAffineMap& first) const;  // this . first

private:
  Rational slope_;
  Rational intercept_;
};

// Picks a child offset c(a) over each parent point a; the anchor used to
// transport fibers. Totality on queried points is the caller's promise.
using BasepointChoice = std::function<Rational(const Rational&)>;

BasepointChoice constant_basepoint(Rational offset);

// Extends a parent-line automorphism to the whole structure: parents go
// through sigma; the child d over a is pulled back through the fiber chart
// anchored at c(a), moved by sigma, and pushed through the chart anchored at
// c2(sigma(a)). The fiber inverse is closed-form: b = d - c(a) + a.
Element extend_iso(const ParentAffineMap& sigma, const BasepointChoice& c,
                   const BasepointChoice& c2, const Element& e);

// Parents -1, 0, 1/2, 1 with the standard fiber offsets; covers all four
// clauses of f.
std::vector<Element> default_iso_grid();

// f-homomorphism, two-way R-preservation and injectivity of the extension on
// a grid. Constants are not required fixed: the reduct forgets 0 and 1.
CheckReport check_reduct_iso(const ParentAffineMap& sigma, const BasepointChoice& c,
                             const BasepointChoice& c2, const std::vector<Element>& grid);

}  // namespace qfiber
