#pragma once

#include "check.hpp"
#include "element.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qfiber {

// A finitely supported family of fiber translations: the automorphism fixing
// every parent point and sending C(p,q) to C(p, q + h(p)), with h zero off
// the stored support. Zero translations are never stored, so map equality is
// automorphism equality.
// Text format: comma-separated "p:t" pairs, e.g. "0:1, 1/2:-3"; the empty
// string is the identity.
class AutomorphismProfile {
public:
  using Map = std::map<Rational, Rational>;

  AutomorphismProfile() = default;
  static AutomorphismProfile from_map(Map shifts);
  static AutomorphismProfile parse(std::string_view text);

  const Map& shifts() const { return shifts_; }
  bool is_identity() const { return shifts_.empty(); }
  Rational shift_at(const Rational& parent_point) const;

  Element apply(const Element& e) const;
  AutomorphismProfile compose(const AutomorphismProfile& o) const;  // this after o
  AutomorphismProfile inverse() const;

  bool operator==(const AutomorphismProfile& o) const { return shifts_ == o.shifts_; }
  bool operator!=(const AutomorphismProfile& o) const { return !(*this == o); }

  std::string str() const;

private:
  Map shifts_;
};

// Deterministic all-cases grid: for every parent point in support(h), two
// fresh parent points (the enumeration-least rationals outside the support)
// and any extras, the parent itself plus the fiber points with offsets
// -1, 0, 1, 1/2.
std::vector<Element> standard_grid(const AutomorphismProfile& h,
                                   const std::vector<Rational>& extra_parents = {});

// Exhaustive f/R/constant check of the profile's action on a grid.
CheckReport check_automorphism(const AutomorphismProfile& h, const std::vector<Element>& grid);

// Reads the translation profile of a black-box automorphism off the probe
// fibers: probes map to the second coordinate of g(C(a,0)). Throws
// SemanticError if g moves a probed parent point or changes a fiber index.
AutomorphismProfile extract_profile(const std::function<Element(const Element&)>& g,
                                    const std::vector<Rational>& probes);

}  // namespace qfiber
