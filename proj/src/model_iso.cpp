#include "model_iso.hpp"

#include "errors.hpp"

namespace qfiber {

ParentAffineMap::ParentAffineMap(Rational slope, Rational intercept)
    : slope_(std::move(slope)), intercept_(std::move(intercept)) {
  if (slope_.is_zero()) throw SemanticError("parent map needs a nonzero slope");
}

ParentAffineMap ParentAffineMap::after(const ParentAffineMap& first) const {
  return {slope_ * first.slope_, slope_ * first.intercept_ + intercept_};
}

BasepointChoice constant_basepoint(Rational offset) {
  return [offset](const Rational&) { return offset; };
}

Element extend_iso(const ParentAffineMap& sigma, const BasepointChoice& c,
                   const BasepointChoice& c2, const Element& e) {
  if (e.is_parent()) return Element::parent(sigma(e.value()));
  const Rational& a = e.fiber();
  const Rational b = e.value() - c(a) + a;  // unique parent with f(P(a), C(a,c(a)), P(b)) = e
  const Rational image_a = sigma(a);
  return interp_f(Element::parent(image_a), Element::child(image_a, c2(image_a)),
                  Element::parent(sigma(b)));
}

std::vector<Element> default_iso_grid() {
  static const Rational parents[] = {Rational(-1), Rational(0), Rational(Int(1), Int(2)),
                                     Rational(1)};
  static const Rational offsets[] = {Rational(-1), Rational(0), Rational(1),
                                     Rational(Int(1), Int(2))};
  std::vector<Element> grid;
  grid.reserve(20);
  for (const Rational& p : parents) {
    grid.push_back(Element::parent(p));
    for (const Rational& q : offsets) grid.push_back(Element::child(p, q));
  }
  return grid;
}

CheckReport check_reduct_iso(const ParentAffineMap& sigma, const BasepointChoice& c,
                             const BasepointChoice& c2, const std::vector<Element>& grid) {
  MapCheckOptions options;
  options.require_constants = false;
  options.require_injective = true;
  return check_element_map(
      [&](const Element& e) { return extend_iso(sigma, c, c2, e); }, grid, options);
}

}  // namespace qfiber
