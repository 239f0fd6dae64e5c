#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "anclab/bounded_scheme.hpp"
#include "anclab/generators.hpp"
#include "anclab/labeling.hpp"

namespace anclab {

struct BenchCell {
  SchemeKind scheme = SchemeKind::kOptimal;
  std::optional<FamilyMode> mode;
  ShapeKind shape = ShapeKind::kRandomRecursive;
  std::uint64_t size = 1024;
  std::uint32_t depth_bound = 4;  // kRandomBoundedDepth only
  std::uint64_t seed = 1;
  std::uint64_t queries = 100000;
  bool deterministic = false;  // zero the timing fields
};

struct BenchReport {
  std::string scheme;
  std::string mode;  // empty when the scheme has none
  std::string shape;
  std::uint64_t n = 0;
  std::uint64_t d = 0;  // 0 when not applicable
  std::uint64_t max_label_bits = 0;
  double mean_label_bits = 0;
  std::uint64_t build_ns = 0;
  double queries_per_sec = 0;
  std::uint64_t seed = 0;
};

/// Forest for a bench cell; skewed_binary picks the height giving about `size` nodes.
RootedForest bench_forest(ShapeKind shape, std::uint64_t size, std::uint32_t depth_bound, std::uint64_t seed);

BenchReport run_bench(const BenchCell& cell);

/// Compact JSON object, keys in BenchReport field order; d is null when 0.
std::string to_json_line(const BenchReport& report);

/// Mean nanoseconds per decode+query over `queries` pairs sampled with seed; the
/// sampled labels are copied into one buffer before timing.
double measure_query_ns(const LabelSet& labels, std::uint64_t queries, std::uint64_t seed);

}  // namespace anclab
