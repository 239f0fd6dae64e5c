#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string_view>

#include "anclab/forest.hpp"

namespace anclab {

enum class ShapeKind {
  kPath,
  kStar,
  kCompleteBinary,
  kCaterpillar,
  kRandomRecursive,
  kRandomBoundedDepth,
  kSkewedBinary,
};

std::string_view to_string(ShapeKind kind);
std::optional<ShapeKind> parse_shape(std::string_view name);

struct ShapeParams {
  std::size_t size = 1;           // node count; ignored by kSkewedBinary
  std::uint32_t depth_bound = 0;  // kRandomBoundedDepth only
  std::uint32_t height = 0;       // kSkewedBinary only
  std::size_t trees = 1;          // number of roots for the random kinds
};

/// Builds a forest of the requested shape. Deterministic for a fixed seed on every
/// platform: randomness comes from std::mt19937_64 through uniform_below().
/// Throws std::invalid_argument on bad parameters.
RootedForest generate(ShapeKind kind, const ShapeParams& params, std::uint64_t seed = 0);

/// Uniform integer in [0, bound) by rejection sampling; bound > 0.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace anclab
