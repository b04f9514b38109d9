#pragma once

#include "rational.hpp"

namespace qfiber::qenum {

// Fixed enumeration of the rationals: 0, 1, -1, 1/2, -1/2, 2, -2, ...
// The positive subsequence is the Calkin-Wilf sequence (breadth-first walk
// of the Calkin-Wilf tree); negatives are interleaved after their mirror.
// Both directions are pure functions of their argument; no table is kept.

Rational rational_at(const Int& index);  // index >= 0
Int index_of(const Rational& q);

}  // namespace qfiber::qenum
