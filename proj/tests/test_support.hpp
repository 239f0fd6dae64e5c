#pragma once

#include <cstdint>
#include <vector>

#include "anclab/forest.hpp"
#include "anclab/generators.hpp"

namespace anclab::test {

// Parent arrays written with 1-based parents, 0 for roots.
inline RootedForest make(std::vector<NodeId> parents) { return RootedForest(std::move(parents)); }

inline RootedForest path(std::size_t n) { return generate(ShapeKind::kPath, ShapeParams{.size = n}); }
inline RootedForest star(std::size_t n) { return generate(ShapeKind::kStar, ShapeParams{.size = n}); }
inline RootedForest complete_binary(std::size_t n) {
  return generate(ShapeKind::kCompleteBinary, ShapeParams{.size = n});
}
inline RootedForest random_tree(std::size_t n, std::uint64_t seed, std::size_t trees = 1) {
  return generate(ShapeKind::kRandomRecursive, ShapeParams{.size = n, .trees = trees}, seed);
}

// Mixed shapes for property tests; index picks the shape.
inline RootedForest varied_forest(std::size_t index, std::size_t n, std::uint64_t seed) {
  switch (index % 7) {
    case 0: return generate(ShapeKind::kPath, ShapeParams{.size = n});
    case 1: return generate(ShapeKind::kStar, ShapeParams{.size = n});
    case 2: return generate(ShapeKind::kCaterpillar, ShapeParams{.size = n});
    case 3: return generate(ShapeKind::kCompleteBinary, ShapeParams{.size = n});
    case 4: return generate(ShapeKind::kRandomRecursive, ShapeParams{.size = n, .trees = 1 + seed % 3}, seed);
    case 5:
      return generate(ShapeKind::kRandomBoundedDepth,
                      ShapeParams{.size = n, .depth_bound = static_cast<std::uint32_t>(2 + seed % 4)}, seed);
    default: return generate(ShapeKind::kRandomRecursive, ShapeParams{.size = n}, seed);
  }
}

}  // namespace anclab::test
