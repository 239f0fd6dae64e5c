#include "anclab/generators.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace anclab {

namespace {

constexpr std::array<std::pair<ShapeKind, std::string_view>, 7> kShapeNames{{
    {ShapeKind::kPath, "path"},
    {ShapeKind::kStar, "star"},
    {ShapeKind::kCompleteBinary, "complete_binary"},
    {ShapeKind::kCaterpillar, "caterpillar"},
    {ShapeKind::kRandomRecursive, "random_recursive"},
    {ShapeKind::kRandomBoundedDepth, "random_bounded_depth"},
    {ShapeKind::kSkewedBinary, "skewed_binary"},
}};

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

// Roots are nodes 1..trees; every later node attaches below an earlier one.
std::vector<NodeId> random_recursive(std::size_t n, std::size_t trees, std::mt19937_64& rng) {
  std::vector<NodeId> parents(n, kNoParent);
  for (std::size_t i = trees; i < n; ++i) {
    parents[i] = static_cast<NodeId>(uniform_below(rng, i) + 1);
  }
  return parents;
}

std::vector<NodeId> random_bounded_depth(std::size_t n, std::size_t trees, std::uint32_t bound, std::mt19937_64& rng) {
  std::vector<NodeId> parents(n, kNoParent);
  std::vector<std::uint32_t> depth(n + 1, 1);
  std::vector<NodeId> open;  // nodes that may still take children
  for (std::size_t i = 0; i < trees; ++i) {
    if (bound > 1) open.push_back(static_cast<NodeId>(i + 1));
  }
  for (std::size_t i = trees; i < n; ++i) {
    const auto v = static_cast<NodeId>(i + 1);
    if (open.empty()) {
      // bound == 1: only roots are possible
      continue;
    }
    const NodeId p = open[uniform_below(rng, open.size())];
    parents[i] = p;
    depth[v] = depth[p] + 1;
    if (depth[v] < bound) open.push_back(v);
  }
  return parents;
}

}  // namespace

std::string_view to_string(ShapeKind kind) {
  for (const auto& [k, name] : kShapeNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ShapeKind> parse_shape(std::string_view name) {
  for (const auto& [k, s] : kShapeNames) {
    if (s == name) return k;
  }
  return std::nullopt;
}

RootedForest generate(ShapeKind kind, const ShapeParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = params.size;
  if (kind != ShapeKind::kSkewedBinary) require(n >= 1, "size must be at least 1");
  std::vector<NodeId> parents;

  switch (kind) {
    case ShapeKind::kPath:
      parents.resize(n);
      for (std::size_t i = 0; i < n; ++i) parents[i] = static_cast<NodeId>(i);
      break;
    case ShapeKind::kStar:
      parents.assign(n, 1);
      parents[0] = kNoParent;
      break;
    case ShapeKind::kCompleteBinary:
      // Heap layout: parent(i) = i / 2.
      parents.resize(n);
      for (std::size_t i = 1; i <= n; ++i) parents[i - 1] = static_cast<NodeId>(i / 2);
      break;
    case ShapeKind::kCaterpillar: {
      // Backbone path 1..m with one pendant leaf per backbone node (as far as n allows).
      const std::size_t m = (n + 1) / 2;
      parents.resize(n);
      for (std::size_t i = 0; i < m; ++i) parents[i] = static_cast<NodeId>(i);
      for (std::size_t i = m; i < n; ++i) parents[i] = static_cast<NodeId>(i - m + 1);
      break;
    }
    case ShapeKind::kRandomRecursive:
      require(params.trees >= 1 && params.trees <= n, "trees must be in [1, size]");
      parents = random_recursive(n, params.trees, rng);
      break;
    case ShapeKind::kRandomBoundedDepth:
      require(params.depth_bound >= 1, "depth bound must be at least 1");
      require(params.trees >= 1 && params.trees <= n, "trees must be in [1, size]");
      require(params.depth_bound > 1 || params.trees == n, "depth bound 1 requires trees == size");
      parents = random_bounded_depth(n, params.trees, params.depth_bound, rng);
      break;
    case ShapeKind::kSkewedBinary: {
      // Complete binary tree of the given height plus one extra leaf below the
      // leftmost leaf: every left child outweighs its sibling by one node, so the
      // heavy path runs the full height while no spine grows past the root.
      const std::uint32_t h = params.height;
      require(h >= 1 && h <= 24, "height must be in [1, 24]");
      const std::size_t complete = (std::size_t{1} << h) - 1;
      parents.resize(complete + 1);
      for (std::size_t i = 1; i <= complete; ++i) parents[i - 1] = static_cast<NodeId>(i / 2);
      parents[complete] = static_cast<NodeId>(std::size_t{1} << (h - 1));
      break;
    }
  }
  return RootedForest(std::move(parents));
}

}  // namespace anclab
