#include "qenum.hpp"

#include "errors.hpp"

#include <utility>
#include <vector>

namespace qfiber::qenum {

namespace {

// Value of node n (1-based, breadth-first) of the Calkin-Wilf tree.
// The bits of n below its leading 1 spell the root-to-node path:
// 0 = left child p/(p+q), 1 = right child (p+q)/q.
Rational cw_value(const Int& n) {
  const std::size_t top = boost::multiprecision::msb(n);
  Int p = 1, q = 1;
  for (std::size_t k = top; k-- > 0;) {
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(k)))
      p += q;
    else
      q += p;
  }
  return Rational(std::move(p), std::move(q));
}

// Node number of the positive reduced rational p/q in the Calkin-Wilf tree.
// Walks toward the root with run-length steps so large entries stay cheap.
// The node number has one bit per tree level; refuse to materialize numbers
// beyond a million bits.
constexpr unsigned kMaxTreeDepth = 1u << 20;

Int cw_node(Int p, Int q) {
  std::vector<std::pair<bool, unsigned>> runs;  // leaf-to-root
  unsigned depth = 0;
  while (p != q) {
    if (p > q) {
      Int m = (p - 1) / q;
      p -= m * q;
      if (m > kMaxTreeDepth - depth)
        throw SemanticError("rational sits too deep in the enumeration tree");
      const auto run = static_cast<unsigned>(m);
      depth += run;
      runs.emplace_back(true, run);
    } else {
      Int m = (q - 1) / p;
      q -= m * p;
      if (m > kMaxTreeDepth - depth)
        throw SemanticError("rational sits too deep in the enumeration tree");
      const auto run = static_cast<unsigned>(m);
      depth += run;
      runs.emplace_back(false, run);
    }
  }
  Int n = 1;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    n <<= it->second;
    if (it->first) n += (Int(1) << it->second) - 1;
  }
  return n;
}

}  // namespace

Rational rational_at(const Int& index) {
  if (index < 0) throw SemanticError("enumeration index must be nonnegative");
  if (index == 0) return Rational(0);
  if (boost::multiprecision::bit_test(index, 0)) return cw_value((index + 1) / 2);
  return -cw_value(index / 2);
}

Int index_of(const Rational& q) {
  if (q.is_zero()) return 0;
  Int n = cw_node(q.num() < 0 ? Int(-q.num()) : q.num(), q.den());
  return q.is_negative() ? Int(2 * n) : Int(2 * n - 1);
}

}  // namespace qfiber::qenum
