#include "anclab/bench.hpp"

#include <chrono>
#include <json.hpp>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "anclab/decomposition.hpp"

namespace anclab {

RootedForest bench_forest(ShapeKind shape, std::uint64_t size, std::uint32_t depth_bound, std::uint64_t seed) {
  ShapeParams params;
  params.size = size;
  if (shape == ShapeKind::kRandomBoundedDepth) params.depth_bound = depth_bound;
  if (shape == ShapeKind::kSkewedBinary)
    params.height = static_cast<std::uint32_t>(std::max(1, ceil_log2(size + 1) - 1));
  return generate(shape, params, seed);
}

namespace {
// Keeps the timed loop from being optimized away.
volatile std::uint64_t query_sink = 0;
}  // namespace

double measure_query_ns(const LabelSet& labels, std::uint64_t queries, std::uint64_t seed) {
  const QueryDecoder decoder(labels.context);
  const std::size_t n = labels.size();
  std::mt19937_64 rng(seed);
  std::vector<std::pair<BitString, BitString>> pairs;
  pairs.reserve(queries);
  for (std::uint64_t q = 0; q < queries; ++q) {
    pairs.emplace_back(labels.labels[1 + uniform_below(rng, n)], labels.labels[1 + uniform_below(rng, n)]);
  }
  std::uint64_t hits = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [a, b] : pairs) hits += decoder.is_ancestor(a, b);
  const auto stop = std::chrono::steady_clock::now();
  query_sink = hits;
  const double ns = std::chrono::duration<double, std::nano>(stop - start).count();
  return queries ? ns / static_cast<double>(queries) : 0.0;
}

BenchReport run_bench(const BenchCell& cell) {
  const RootedForest forest = bench_forest(cell.shape, cell.size, cell.depth_bound, cell.seed);
  LabelRequest request;
  request.scheme = cell.scheme;
  request.mode = cell.mode;
  if (cell.scheme == SchemeKind::kRand) request.seed = cell.seed;
  if (cell.mode) shared_family(*cell.mode, forest.size(), 1, cell.scheme == SchemeKind::kParenthood);

  const auto start = std::chrono::steady_clock::now();
  const LabelSet labels = label_forest(forest, request);
  const auto stop = std::chrono::steady_clock::now();

  BenchReport r;
  r.scheme = to_string(cell.scheme);
  r.mode = cell.mode ? std::string(to_string(*cell.mode)) : std::string();
  r.shape = to_string(cell.shape);
  r.n = forest.size();
  r.seed = cell.seed;
  if (cell.mode) {
    r.d = labels.context.d;
    if (*cell.mode != FamilyMode::kFixedND) {
      const TreeStats stats = compute_stats(forest);
      const std::uint64_t raw =
          cell.scheme == SchemeKind::kParenthood ? stats.forest_depth : SpineDecomposition(forest, stats).depth();
      r.d = std::uint64_t{1} << ceil_log2(raw);
    }
  }
  std::uint64_t total = 0;
  for (NodeId v = 1; v <= forest.size(); ++v) {
    r.max_label_bits = std::max<std::uint64_t>(r.max_label_bits, labels.labels[v].size());
    total += labels.labels[v].size();
  }
  r.mean_label_bits = static_cast<double>(total) / static_cast<double>(forest.size());
  if (!cell.deterministic) {
    r.build_ns = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    const double ns = measure_query_ns(labels, cell.queries, cell.seed);
    r.queries_per_sec = ns > 0 ? 1e9 / ns : 0.0;
  }
  return r;
}

std::string to_json_line(const BenchReport& r) {
  nlohmann::ordered_json j;
  j["scheme"] = r.scheme;
  j["mode"] = r.mode.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.mode);
  j["shape"] = r.shape;
  j["n"] = r.n;
  j["d"] = r.d ? nlohmann::ordered_json(r.d) : nlohmann::ordered_json(nullptr);
  j["max_label_bits"] = r.max_label_bits;
  j["mean_label_bits"] = r.mean_label_bits;
  j["build_ns"] = r.build_ns;
  j["queries_per_sec"] = r.queries_per_sec;
  j["seed"] = r.seed;
  return j.dump();
}

}  // namespace anclab
