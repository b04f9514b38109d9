#include "check.hpp"

#include "errors.hpp"

#include <algorithm>
#include <numeric>

namespace qfiber {

std::string CheckReport::str() const {
  if (!ok) return "check failed: " + detail;
  return "check passed: " + std::to_string(elements) + " elements, " +
         std::to_string(triples) + " triples, " + std::to_string(pairs) + " pairs";
}

CheckReport check_element_map(const std::function<Element(const Element&)>& map,
                              const std::vector<Element>& grid,
                              const MapCheckOptions& options) {
  if (grid.empty()) throw SemanticError("check grid must be nonempty");
  const std::size_t n = grid.size();
  CheckReport report;
  report.elements = n;

  if (options.require_constants) {
    for (const Element& c : {interp_zero(), interp_one()}) {
      const Element image = map(c);
      if (image != c) {
        report.ok = false;
        report.detail = "constant " + c.str() + " is moved to " + image.str();
        return report;
      }
    }
  }

  std::vector<Element> images;
  images.reserve(n);
  for (const Element& e : grid) images.push_back(map(e));

  if (options.require_injective) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return images[a] < images[b]; });
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const std::size_t a = order[i], b = order[i + 1];
      if (images[a] == images[b] && grid[a] != grid[b]) {
        report.ok = false;
        report.detail = "not injective: " + grid[a].str() + " and " + grid[b].str() +
                        " both map to " + images[a].str();
        return report;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Element lhs = map(interp_f(grid[i], grid[j], grid[k]));
        const Element rhs = interp_f(images[i], images[j], images[k]);
        if (lhs != rhs) {
          report.ok = false;
          report.detail = "f-equivariance fails at (" + grid[i].str() + ", " + grid[j].str() +
                          ", " + grid[k].str() + "): image of f is " + lhs.str() +
                          ", f of images is " + rhs.str();
          return report;
        }
      }
    }
  }
  report.triples = n * n * n;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (interp_R(grid[i], grid[j]) != interp_R(images[i], images[j])) {
        report.ok = false;
        report.detail =
            "R-preservation fails at (" + grid[i].str() + ", " + grid[j].str() + ")";
        return report;
      }
    }
  }
  report.pairs = n * n;

  return report;
}

}  // namespace qfiber
