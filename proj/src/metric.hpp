#pragma once

#include "automorphism.hpp"

#include <map>
#include <string>
#include <string_view>

namespace qfiber {

// Discrete, translation-invariant, unbounded metric on the rationals:
// 0 when x = y, else 1 + |x - y|.
Rational factor_metric(const Rational& x, const Rational& y);

// Weighted sum over the union of supports: 2^(-index(a)) * min(1, d(g(a),h(a)))
// with the fixed enumeration supplying the weights. Coordinates where the two
// profiles agree contribute exactly zero and are skipped, so only differing
// coordinates ever need their enumeration weight.
Rational product_metric(const AutomorphismProfile& g, const AutomorphismProfile& h);

// product_metric plus an uncapped factor-metric term at coordinate j; this is
// the metric that blows up inside a subgroup leaving coordinate j free.
Rational augmented_metric(const Rational& j, const AutomorphismProfile& g,
                          const AutomorphismProfile& h);

// Finitely many required translation values at parent points. An empty value
// set is the whole group; requiring value 0 everywhere on a finite set is the
// pointwise stabilizer of those fibers.
class BasicOpenSet {
public:
  using Map = std::map<Rational, Rational>;

  BasicOpenSet() = default;

  static BasicOpenSet stabilizer(const std::vector<Rational>& parent_points);

  // Adds a constraint; conflicting duplicates are rejected.
  void require(Rational parent_point, Rational translation);

  const Map& constraints() const { return constraints_; }
  bool contains(const AutomorphismProfile& p) const;

private:
  Map constraints_;
};

// Two members of U at augmented distance > B: g realizes exactly U's
// constraints, h additionally translates the first unconstrained coordinate j
// by ceil(B) + 1.
struct EscapeWitness {
  AutomorphismProfile g;
  AutomorphismProfile h;
  Rational j;
  Rational distance;

  std::string str() const;  // "g: ...\nh: ...\nj: ...\ndistance: ..."
};

EscapeWitness escape_witness(const BasicOpenSet& u, const Rational& bound);

}  // namespace qfiber
