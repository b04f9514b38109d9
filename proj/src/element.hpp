#pragma once

#include "rational.hpp"

#include <string>
#include <string_view>

namespace qfiber {

// A point of the two-sorted domain M: either a point q on the parent line,
// or the point with offset q in the child fiber attached to parent point p.
// Text format: "P(q)" and "C(p,q)".
class Element {
public:
  static Element parent(Rational q) { return Element(false, Rational(), std::move(q)); }
  static Element child(Rational p, Rational q) {
    return Element(true, std::move(p), std::move(q));
  }

  bool is_parent() const { return !is_child_; }
  bool is_child() const { return is_child_; }

  // Parent coordinate for parents, fiber offset for children.
  const Rational& value() const { return value_; }
  // Index of the fiber a child lives in. Children only.
  const Rational& fiber() const;

  bool operator==(const Element& o) const {
    return is_child_ == o.is_child_ && value_ == o.value_ &&
           (!is_child_ || fiber_ == o.fiber_);
  }
  bool operator!=(const Element& o) const { return !(*this == o); }
  // Parents before children, then coordinatewise. Used for deterministic grids.
  bool operator<(const Element& o) const;

  std::string str() const;
  static Element parse(std::string_view text);

private:
  Element(bool is_child, Rational p, Rational q)
      : is_child_(is_child), fiber_(std::move(p)), value_(std::move(q)) {}

  bool is_child_;
  Rational fiber_;
  Rational value_;
};

// Interpretation of the signature symbols over M.
Element interp_zero();
Element interp_one();
bool interp_R(const Element& a, const Element& b);

// The parent-line reduct: F(p,q,r) = (q - p) + r.
Rational eval_F(const Rational& p, const Rational& q, const Rational& r);

// Which clause of the definition of f applies, 1-4 in definition order.
// The fourth clause is the fall-through for shapes the first three miss.
int interp_case(const Element& a, const Element& b, const Element& c);
Element interp_f(const Element& a, const Element& b, const Element& c);

}  // namespace qfiber
