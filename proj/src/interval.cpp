#include "anclab/interval.hpp"

#include <stdexcept>
#include <string>

namespace anclab {

bool in_range(const ParamTable& params, const Interval& interval) {
  const int k = interval.level;
  return k >= 1 && k <= params.max_level() && interval.a >= 1 && interval.a <= params.A(k) && interval.b >= 1 &&
         interval.b <= params.B(k);
}

Span interval_bounds(const ParamTable& params, const Interval& interval) {
  if (!in_range(params, interval)) {
    throw std::out_of_range("interval (k=" + std::to_string(interval.level) + ", a=" + std::to_string(interval.a) +
                            ", b=" + std::to_string(interval.b) + ") outside the parameter ranges");
  }
  const std::int64_t x = params.x(interval.level);
  return {interval.a * x, (interval.a + interval.b) * x};
}

}  // namespace anclab
