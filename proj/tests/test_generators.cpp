#include <doctest.h>

#include "anclab/decomposition.hpp"
#include "anclab/generators.hpp"
#include "test_support.hpp"

using namespace anclab;

namespace {

// Longest root-to-leaf path that always follows a heaviest child.
std::size_t heavy_path_length(const RootedForest& f) {
  const auto s = compute_stats(f);
  std::size_t best = 0;
  for (NodeId r : f.roots()) {
    std::size_t len = 0;
    for (NodeId v = r; v != 0;) {
      ++len;
      NodeId next = 0;
      for (NodeId c : f.children(v)) {
        if (next == 0 || s.weight[c] > s.weight[next]) next = c;
      }
      v = next;
    }
    best = std::max(best, len);
  }
  return best;
}

}  // namespace

TEST_CASE("fixed shapes") {
  CHECK(test::path(5).parents() == std::vector<NodeId>{0, 1, 2, 3, 4});
  CHECK(test::star(4).parents() == std::vector<NodeId>{0, 1, 1, 1});
  CHECK(test::complete_binary(7).parents() == std::vector<NodeId>{0, 1, 1, 2, 2, 3, 3});
  const auto cat = generate(ShapeKind::kCaterpillar, ShapeParams{.size = 9});
  CHECK(cat.size() == 9);
  CHECK(compute_stats(cat).forest_depth <= 6);
}

TEST_CASE("seeded shapes are deterministic") {
  CHECK(test::random_tree(100, 7) == test::random_tree(100, 7));
  CHECK_FALSE(test::random_tree(100, 7) == test::random_tree(100, 8));
  const ShapeParams p{.size = 300, .depth_bound = 3};
  CHECK(generate(ShapeKind::kRandomBoundedDepth, p, 5) == generate(ShapeKind::kRandomBoundedDepth, p, 5));
}

TEST_CASE("bounded depth is respected") {
  for (std::uint32_t bound = 2; bound <= 8; ++bound) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto f = generate(ShapeKind::kRandomBoundedDepth, ShapeParams{.size = 500, .depth_bound = bound}, seed);
      CHECK(f.size() == 500);
      CHECK(compute_stats(f).forest_depth <= bound);
    }
  }
  const auto flat = generate(ShapeKind::kRandomBoundedDepth, ShapeParams{.size = 6, .depth_bound = 1, .trees = 6}, 1);
  CHECK(flat.roots().size() == 6);
  CHECK_THROWS_AS(generate(ShapeKind::kRandomBoundedDepth, ShapeParams{.size = 6, .depth_bound = 1}, 1),
                  std::invalid_argument);
}

TEST_CASE("skewed binary trees have long heavy paths and shallow spines") {
  for (std::uint32_t h = 2; h <= 14; ++h) {
    const auto f = generate(ShapeKind::kSkewedBinary, ShapeParams{.height = h});
    CHECK(f.size() == (std::size_t{1} << h));
    CHECK(spine_decomposition_depth(f) <= 4);
    CHECK(heavy_path_length(f) >= h - 1);
  }
  const auto ten = generate(ShapeKind::kSkewedBinary, ShapeParams{.height = 10});
  CHECK(spine_decomposition_depth(ten) <= 4);
  CHECK(heavy_path_length(ten) >= 9);
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(generate(ShapeKind::kPath, ShapeParams{.size = 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate(ShapeKind::kRandomBoundedDepth, ShapeParams{.size = 5, .depth_bound = 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate(ShapeKind::kSkewedBinary, ShapeParams{.height = 0}), std::invalid_argument);
  CHECK_FALSE(parse_shape("tree").has_value());
  CHECK(parse_shape("random_recursive") == ShapeKind::kRandomRecursive);
  CHECK(to_string(ShapeKind::kSkewedBinary) == "skewed_binary");
}

TEST_CASE("multi-root random forests") {
  const auto f = test::random_tree(50, 3, 4);
  CHECK(f.roots().size() == 4);
}

TEST_CASE("uniform_below stays in range") {
  std::mt19937_64 rng(1);
  for (std::uint64_t bound = 1; bound < 50; ++bound) {
    for (int i = 0; i < 100; ++i) CHECK(uniform_below(rng, bound) < bound);
  }
}
