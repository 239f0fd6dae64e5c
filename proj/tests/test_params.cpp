#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "anclab/interval.hpp"
#include "anclab/params.hpp"

using namespace anclab;

TEST_CASE("small parameter values") {
  const ParamTable p(1000, 2);
  CHECK(p.x(1) == 1);
  CHECK(p.x(2) == 1);
  CHECK(p.c(1) == 1.0);
  CHECK(p.c(2) == doctest::Approx(1.5));
  CHECK(p.c(3) == doctest::Approx(1.5 + 1.0 / (3 * std::log2(3.0) * std::log2(3.0))));
  CHECK(p.c(3) == doctest::Approx(1.6327).epsilon(1e-4));
  CHECK(p.B(1) == 2);
  CHECK(p.B(2) == 18);
  CHECK(p.A(1) == p.N());
  CHECK(p.max_level() == 10);
}

TEST_CASE("gamma bound") {
  const double g = ParamTable::gamma();
  CHECK(g > 2.0);
  CHECK(g < 2.1);
  for (std::uint64_t n : {1u, 7u, 1000u, 1u << 20})
    CHECK(ParamTable(n, 3).N() == static_cast<std::int64_t>(std::ceil(g * n)));
}

TEST_CASE("level formulas hold on a grid") {
  for (std::uint64_t n : {2u, 3u, 100u, 1u << 16, 1u << 20}) {
    for (std::uint64_t d : {1u, 2u, 3u, 8u, 1000u}) {
      const ParamTable p(n, d);
      CHECK(p.max_level() == std::max(1, ceil_log2(n)));
      std::int64_t prev_x = 0;
      for (int k = 1; k <= p.max_level(); ++k) {
        CHECK(p.x(k) >= prev_x);
        prev_x = p.x(k);
        CHECK(p.c(k) <= ParamTable::gamma());
        if (k >= 2) {
          const long double lg = std::log2(static_cast<long double>(k));
          const long double w = (d + 1) * k * lg * lg;
          CHECK(p.x(k) == static_cast<std::int64_t>(std::ceil(std::ldexp(1.0L, k - 1) / w)));
          CHECK(p.A(k) == 1 + static_cast<std::int64_t>(std::ceil(p.N() * w / std::ldexp(1.0L, k - 1))));
          CHECK(p.B(k) == static_cast<std::int64_t>(std::ceil(2 * static_cast<long double>(p.c(k)) * w)));
          CHECK(p.c(k) == doctest::Approx(p.c(k - 1) + 1.0 / (k * lg * lg)));
        }
        CHECK(p.max_B() >= p.B(k));
      }
    }
  }
}

TEST_CASE("floor of c times m is exact") {
  const ParamTable p(1u << 20, 4);
  for (int k = 1; k <= p.max_level(); ++k) {
    for (std::uint64_t m : {0ull, 1ull, 2ull, 3ull, 1000ull, 123457ull, 1ull << 20, (1ull << 31) - 1}) {
      const long double exact = static_cast<long double>(p.c(k)) * static_cast<long double>(m);
      CHECK(p.floor_c_times(k, m) == static_cast<std::int64_t>(std::floor(exact)));
    }
  }
  CHECK(p.floor_c_times(1, 77) == 77);
}

TEST_CASE("minimal level") {
  CHECK(ParamTable::min_level(1) == 1);
  CHECK(ParamTable::min_level(2) == 1);
  CHECK(ParamTable::min_level(3) == 2);
  CHECK(ParamTable::min_level(4) == 2);
  CHECK(ParamTable::min_level(5) == 3);
  CHECK(ParamTable::min_level(1024) == 10);
  CHECK(ParamTable::min_level(1025) == 11);
}

TEST_CASE("ceil_log2") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(1ull << 40) == 40);
  CHECK(ceil_log2((1ull << 40) + 1) == 41);
}

TEST_CASE("supported range") {
  CHECK_THROWS_AS(ParamTable(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(ParamTable(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(ParamTable(ParamTable::kMaxN + 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ParamTable(4, ParamTable::kMaxD + 1), std::invalid_argument);
  CHECK_NOTHROW(ParamTable(ParamTable::kMaxN, ParamTable::kMaxD));
  CHECK(ParamTable(1, 1).max_level() == 1);
}
