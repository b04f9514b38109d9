#include "automorphism.hpp"

#include "errors.hpp"
#include "qenum.hpp"
#include "textio.hpp"

#include <set>
#include <utility>

namespace qfiber {

AutomorphismProfile AutomorphismProfile::from_map(Map shifts) {
  AutomorphismProfile p;
  for (auto& [point, amount] : shifts)
    if (!amount.is_zero()) p.shifts_.emplace(point, std::move(amount));
  return p;
}

AutomorphismProfile AutomorphismProfile::parse(std::string_view text) {
  Map shifts;
  for (const std::string& entry : split_top_level(text, ',')) {
    const std::size_t colon = entry.find(':');
    if (colon == std::string::npos)
      throw ParseError("profile entry '" + entry + "' is not of the form p:t");
    Rational point = Rational::parse(std::string_view(entry).substr(0, colon));
    Rational amount = Rational::parse(std::string_view(entry).substr(colon + 1));
    if (shifts.count(point))
      throw SemanticError("duplicate support point " + point.str() + " in profile");
    shifts.emplace(std::move(point), std::move(amount));
  }
  return from_map(std::move(shifts));
}

Rational AutomorphismProfile::shift_at(const Rational& parent_point) const {
  auto it = shifts_.find(parent_point);
  return it == shifts_.end() ? Rational(0) : it->second;
}

Element AutomorphismProfile::apply(const Element& e) const {
  if (e.is_parent()) return e;
  auto it = shifts_.find(e.fiber());
  if (it == shifts_.end()) return e;
  return Element::child(e.fiber(), e.value() + it->second);
}

AutomorphismProfile AutomorphismProfile::compose(const AutomorphismProfile& o) const {
  // translation amounts add pointwise
  Map merged = shifts_;
  for (const auto& [point, amount] : o.shifts_) {
    auto [it, inserted] = merged.emplace(point, amount);
    if (!inserted) {
      it->second += amount;
      if (it->second.is_zero()) merged.erase(it);
    }
  }
  AutomorphismProfile result;
  result.shifts_ = std::move(merged);
  return result;
}

AutomorphismProfile AutomorphismProfile::inverse() const {
  AutomorphismProfile result;
  for (const auto& [point, amount] : shifts_) result.shifts_.emplace(point, -amount);
  return result;
}

std::string AutomorphismProfile::str() const {
  std::string out;
  for (const auto& [point, amount] : shifts_) {
    if (!out.empty()) out += ", ";
    out += point.str();
    out += ':';
    out += amount.str();
  }
  return out;
}

std::vector<Element> standard_grid(const AutomorphismProfile& h,
                                   const std::vector<Rational>& extra_parents) {
  std::set<Rational> parents;
  for (const auto& [point, amount] : h.shifts()) parents.insert(point);
  int fresh = 0;
  for (Int i = 0; fresh < 2; ++i) {
    Rational candidate = qenum::rational_at(i);
    if (!h.shifts().count(candidate)) {
      parents.insert(std::move(candidate));
      ++fresh;
    }
  }
  for (const Rational& p : extra_parents) parents.insert(p);

  static const Rational offsets[] = {Rational(-1), Rational(0), Rational(1),
                                     Rational(Int(1), Int(2))};
  std::vector<Element> grid;
  grid.reserve(parents.size() * 5);
  for (const Rational& p : parents) {
    grid.push_back(Element::parent(p));
    for (const Rational& q : offsets) grid.push_back(Element::child(p, q));
  }
  return grid;
}

CheckReport check_automorphism(const AutomorphismProfile& h, const std::vector<Element>& grid) {
  return check_element_map([&h](const Element& e) { return h.apply(e); }, grid);
}

AutomorphismProfile extract_profile(const std::function<Element(const Element&)>& g,
                                    const std::vector<Rational>& probes) {
  AutomorphismProfile::Map shifts;
  for (const Rational& a : probes) {
    const Element parent = Element::parent(a);
    if (g(parent) != parent)
      throw SemanticError("contract violation: map moves parent point " + parent.str());
    const Element image = g(Element::child(a, Rational(0)));
    if (!image.is_child() || image.fiber() != a)
      throw SemanticError("contract violation: map does not preserve the fiber over " +
                          a.str());
    if (!image.value().is_zero()) shifts.emplace(a, image.value());
  }
  return AutomorphismProfile::from_map(std::move(shifts));
}

}  // namespace qfiber
