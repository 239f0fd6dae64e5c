#include <doctest.h>

#include <stdexcept>

#include "anclab/interval.hpp"

using namespace anclab;

TEST_CASE("interval endpoints") {
  const ParamTable p(1000, 2);
  CHECK(interval_bounds(p, Interval{1, 5, 2}) == Span{5, 7});
  CHECK(interval_bounds(p, Interval{2, 3, 1}) == Span{3, 4});
  CHECK_THROWS_AS(interval_bounds(p, Interval{1, 5, 0}), std::out_of_range);
  CHECK_THROWS_AS(interval_bounds(p, Interval{1, 0, 1}), std::out_of_range);
  CHECK_THROWS_AS(interval_bounds(p, Interval{0, 1, 1}), std::out_of_range);
  CHECK_THROWS_AS(interval_bounds(p, Interval{11, 1, 1}), std::out_of_range);
  CHECK_THROWS_AS(interval_bounds(p, Interval{2, 1, p.B(2) + 1}), std::out_of_range);
  CHECK_THROWS_AS(interval_bounds(p, Interval{2, p.A(2) + 1, 1}), std::out_of_range);
  CHECK(in_range(p, Interval{2, p.A(2), p.B(2)}));
  const int k = p.max_level();
  CHECK(interval_bounds(p, Interval{k, 2, 3}) == Span{2 * p.x(k), 5 * p.x(k)});
}

TEST_CASE("containment and precedence") {
  CHECK(contains(Span{5, 7}, Span{6, 7}));
  CHECK(strictly_contains(Span{5, 7}, Span{6, 7}));
  CHECK(contains(Span{5, 7}, Span{5, 7}));
  CHECK_FALSE(strictly_contains(Span{5, 7}, Span{5, 7}));
  CHECK_FALSE(contains(Span{6, 7}, Span{5, 7}));
  CHECK(precedes(Span{5, 7}, Span{7, 9}));
  CHECK_FALSE(precedes(Span{5, 7}, Span{6, 9}));
  CHECK_FALSE(precedes(Span{7, 9}, Span{5, 7}));
}
