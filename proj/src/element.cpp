#include "element.hpp"

#include "errors.hpp"

#include <cassert>
#include <cctype>

namespace qfiber {

const Rational& Element::fiber() const {
  assert(is_child_);
  return fiber_;
}

bool Element::operator<(const Element& o) const {
  if (is_child_ != o.is_child_) return !is_child_;
  if (is_child_ && fiber_ != o.fiber_) return fiber_ < o.fiber_;
  return value_ < o.value_;
}

std::string Element::str() const {
  if (is_child_) return "C(" + fiber_.str() + "," + value_.str() + ")";
  return "P(" + value_.str() + ")";
}

Element Element::parse(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  if (s.empty()) throw ParseError("empty element literal", b);
  char tag = s[0];
  if (tag != 'P' && tag != 'C')
    throw ParseError("element literal must start with 'P' or 'C'", b);
  if (s.size() < 3 || s[1] != '(' || s.back() != ')')
    throw ParseError("element literal must look like P(q) or C(p,q)", b);
  std::string_view inner = s.substr(2, s.size() - 3);
  if (tag == 'P') {
    return parent(Rational::parse(inner));
  }
  std::size_t comma = inner.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("C(p,q) needs two comma-separated coordinates", b);
  return child(Rational::parse(inner.substr(0, comma)), Rational::parse(inner.substr(comma + 1)));
}

Element interp_zero() { return Element::parent(Rational(0)); }
Element interp_one() { return Element::parent(Rational(1)); }

bool interp_R(const Element& a, const Element& b) {
  return a.is_parent() && b.is_child() && b.fiber() == a.value();
}

Rational eval_F(const Rational& p, const Rational& q, const Rational& r) {
  // (q - p) + r over one common denominator, reduced once
  Int pd_rd = p.den() * r.den();
  Int num = q.num() * pd_rd - p.num() * (q.den() * r.den()) + r.num() * (p.den() * q.den());
  return Rational(std::move(num), q.den() * std::move(pd_rd));
}

int interp_case(const Element& a, const Element& b, const Element& c) {
  const bool all_parent = a.is_parent() && b.is_parent() && c.is_parent();
  const bool same_fiber = a.is_child() && b.is_child() && c.is_child() &&
                          a.fiber() == b.fiber() && b.fiber() == c.fiber();
  const bool onto_fiber =
      a.is_parent() && b.is_child() && b.fiber() == a.value() && c.is_parent();
  assert(static_cast<int>(all_parent) + static_cast<int>(same_fiber) +
             static_cast<int>(onto_fiber) <=
         1);
  if (all_parent) return 1;
  if (same_fiber) return 2;
  if (onto_fiber) return 3;
  return 4;
}

Element interp_f(const Element& a, const Element& b, const Element& c) {
  switch (interp_case(a, b, c)) {
    case 1:
      return Element::parent(eval_F(a.value(), b.value(), c.value()));
    case 2:
      return Element::child(a.fiber(), eval_F(a.value(), b.value(), c.value()));
    case 3:
      return Element::child(a.value(), eval_F(a.value(), b.value(), c.value()));
    default:
      return c;
  }
}

}  // namespace qfiber
