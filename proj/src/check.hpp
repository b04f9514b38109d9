#pragma once

#include "element.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace qfiber {

// Outcome of a structure-map check: success with the exhaustive counts, or
// the first counterexample found.
struct CheckReport {
  bool ok = true;
  std::string detail;
  std::size_t elements = 0;
  std::size_t triples = 0;
  std::size_t pairs = 0;

  std::string str() const;
};

struct MapCheckOptions {
  bool require_constants = true;  // images of P(0), P(1) must be fixed
  bool require_injective = false;
};

// Checks a black-box element map against the structure on a finite grid:
// f-equivariance on every ordered triple, R-preservation in both directions
// on every ordered pair, and optionally constant fixing and injectivity.
// Throws SemanticError on an empty grid.
CheckReport check_element_map(const std::function<Element(const Element&)>& map,
                              const std::vector<Element>& grid,
                              const MapCheckOptions& options = {});

}  // namespace qfiber
