#include "metric.hpp"

#include "errors.hpp"
#include "qenum.hpp"

namespace qfiber {

namespace {

// Exact weight 1/2^e. The exponent is an enumeration index; beyond 2^16 the
// denominator would not be worth materializing.
constexpr unsigned kMaxWeightExponent = 1u << 16;

Rational pow2_weight(const Int& exponent) {
  if (exponent > kMaxWeightExponent)
    throw SemanticError("support point sits too deep in the enumeration for exact weights");
  return Rational(Int(1), Int(1) << static_cast<unsigned>(exponent));
}

}  // namespace

Rational factor_metric(const Rational& x, const Rational& y) {
  if (x == y) return Rational(0);
  return Rational(1) + (x - y).abs();
}

Rational product_metric(const AutomorphismProfile& g, const AutomorphismProfile& h) {
  Rational total(0);
  auto gi = g.shifts().begin();
  auto hi = h.shifts().begin();
  const Rational zero(0);
  while (gi != g.shifts().end() || hi != h.shifts().end()) {
    const Rational* point;
    const Rational* gv;
    const Rational* hv;
    if (hi == h.shifts().end() || (gi != g.shifts().end() && gi->first < hi->first)) {
      point = &gi->first;
      gv = &gi->second;
      hv = &zero;
      ++gi;
    } else if (gi == g.shifts().end() || hi->first < gi->first) {
      point = &hi->first;
      gv = &zero;
      hv = &hi->second;
      ++hi;
    } else {
      point = &gi->first;
      gv = &gi->second;
      hv = &hi->second;
      ++gi;
      ++hi;
    }
    if (*gv == *hv) continue;  // the capped factor term is exactly zero
    Rational capped = factor_metric(*gv, *hv);
    if (capped > Rational(1)) capped = Rational(1);
    total += pow2_weight(qenum::index_of(*point)) * capped;
  }
  return total;
}

Rational augmented_metric(const Rational& j, const AutomorphismProfile& g,
                          const AutomorphismProfile& h) {
  return product_metric(g, h) + factor_metric(g.shift_at(j), h.shift_at(j));
}

BasicOpenSet BasicOpenSet::stabilizer(const std::vector<Rational>& parent_points) {
  BasicOpenSet u;
  for (const Rational& p : parent_points) u.require(p, Rational(0));
  return u;
}

void BasicOpenSet::require(Rational parent_point, Rational translation) {
  auto [it, inserted] = constraints_.emplace(std::move(parent_point), translation);
  if (!inserted && it->second != translation)
    throw SemanticError("conflicting constraints at parent point " + it->first.str());
}

bool BasicOpenSet::contains(const AutomorphismProfile& p) const {
  for (const auto& [point, required] : constraints_)
    if (p.shift_at(point) != required) return false;
  return true;
}

std::string EscapeWitness::str() const {
  auto line = [](const char* label, const std::string& text) {
    std::string out = label;
    if (!text.empty()) {
      out += ' ';
      out += text;
    }
    return out;
  };
  return line("g:", g.str()) + "\n" + line("h:", h.str()) + "\nj: " + j.str() +
         "\ndistance: " + distance.str();
}

EscapeWitness escape_witness(const BasicOpenSet& u, const Rational& bound) {
  if (bound.is_negative()) throw SemanticError("escape bound must be nonnegative");

  // least-index parent point left free by the constraints
  Rational j;
  for (Int i = 0;; ++i) {
    j = qenum::rational_at(i);
    if (!u.constraints().count(j)) break;
  }

  const AutomorphismProfile g = AutomorphismProfile::from_map(u.constraints());
  AutomorphismProfile::Map bumped = g.shifts();
  bumped.emplace(j, Rational(bound.ceil_value() + 1));
  const AutomorphismProfile h = AutomorphismProfile::from_map(std::move(bumped));

  return EscapeWitness{g, h, j, augmented_metric(j, g, h)};
}

}  // namespace qfiber
