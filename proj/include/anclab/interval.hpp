#pragma once

#include <compare>
#include <cstdint>

#include "anclab/params.hpp"

namespace anclab {

/// Level-k interval I_{k,a,b} = [a x_k, (a+b) x_k), with a in [1, A_k] and b in [1, B_k].
struct Interval {
  int level = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  auto operator<=>(const Interval&) const = default;
};

/// Half-open integer range [lo, hi).
struct Span {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  auto operator<=>(const Span&) const = default;
};

/// Endpoints of I under P. Throws std::out_of_range if level, a or b leave their ranges.
Span interval_bounds(const ParamTable& params, const Interval& interval);

/// True if level, a and b are within the ranges of params.
bool in_range(const ParamTable& params, const Interval& interval);

constexpr bool contains(Span outer, Span inner) { return outer.lo <= inner.lo && inner.hi <= outer.hi; }
constexpr bool strictly_contains(Span outer, Span inner) { return contains(outer, inner) && outer != inner; }
/// left lies entirely before right.
constexpr bool precedes(Span left, Span right) { return left.hi <= right.lo; }

}  // namespace anclab
