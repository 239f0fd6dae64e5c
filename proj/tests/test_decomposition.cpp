#include <doctest.h>

#include "anclab/assignment.hpp"
#include "anclab/decomposition.hpp"
#include "test_support.hpp"

using namespace anclab;
using anclab::test::make;

namespace {

// Spines of T* as the interval assigner sees them, one per recursion root.
std::size_t folded_spine_depth(const FoldedForest& ff, bool apex_roots_only) {
  const LayoutForest layout(ff.folded, ff.dfs_num);
  const FoldedSpine spines(ff);
  std::size_t depth = 0;
  std::vector<NodeId> stack(layout.roots().begin(), layout.roots().end());
  std::vector<NodeId> spine;
  while (!stack.empty()) {
    const NodeId root = stack.back();
    stack.pop_back();
    spine.clear();
    spines.spine(layout, root, spine);
    if (!apex_roots_only || ff.is_apex(root)) depth = std::max(depth, spine.size());
    for (std::size_t i = 0; i < spine.size(); ++i) {
      const NodeId next = i + 1 < spine.size() ? spine[i + 1] : 0;
      for (NodeId c : layout.children(spine[i])) {
        if (c != next) stack.push_back(c);
      }
    }
  }
  return depth;
}

bool folded_ancestor(const FoldedForest& ff, NodeId u, NodeId v) { return is_ancestor_oracle(ff.folded, u, v); }

}  // namespace

TEST_CASE("spine of a path of five") {
  const auto p = test::path(5);
  const auto s = compute_stats(p);
  CHECK(compute_spine(p, s, 1).nodes == std::vector<NodeId>{1, 2, 3});
  CHECK(spine_decomposition_depth(p) == 3);
}

TEST_CASE("spines of complete binary trees, stars and singletons") {
  const auto b = test::complete_binary(7);
  CHECK(compute_spine(b, compute_stats(b), 1).nodes == std::vector<NodeId>{1});
  for (std::size_t n : {3u, 7u, 15u, 31u, 1023u}) CHECK(spine_decomposition_depth(test::complete_binary(n)) == 1);
  CHECK(spine_decomposition_depth(test::star(50)) == 1);
  const auto one = make({0});
  CHECK(compute_spine(one, compute_stats(one), 1).nodes == std::vector<NodeId>{1});
}

TEST_CASE("spine invariants on random trees") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto f = test::varied_forest(seed, 300, seed);
    const auto stats = compute_stats(f);
    const SpineDecomposition dec(f, stats);
    std::size_t apex = 0, heavy = 0;
    for (NodeId v = 1; v <= f.size(); ++v) {
      (dec.is_apex(v) ? apex : heavy) += 1;
      if (!dec.is_apex(v)) {
        CHECK(2 * stats.weight[v] > stats.weight[dec.spine_apex(v)]);
        CHECK(is_ancestor_oracle(f, dec.spine_apex(v), v));
      }
      if (dec.is_apex(v)) {
        const auto spine = dec.spine(v);
        for (std::size_t i = 1; i < spine.size(); ++i) CHECK(f.parent(spine[i]) == spine[i - 1]);
        // Hanging trees have at most half the weight of the spine root.
        for (NodeId u : spine) {
          for (NodeId c : f.children(u)) {
            if (dec.is_apex(c)) CHECK(2 * stats.weight[c] <= stats.weight[v]);
          }
        }
      }
    }
    CHECK(apex + heavy == f.size());
    CHECK(dec.depth() <= stats.forest_depth);
  }
}

TEST_CASE("folding a path of five") {
  const auto ff = fold(test::path(5));
  CHECK(ff.folded.parents() == std::vector<NodeId>{0, 1, 1, 3, 4});
  CHECK(ff.is_apex(1));
  CHECK_FALSE(ff.is_apex(2));
  CHECK_FALSE(ff.is_apex(3));
  CHECK(ff.is_apex(4));
  CHECK(ff.is_apex(5));
  // Node 5 is APEX (the spine of {4, 5} is node 4 alone), so it is its own apex.
  CHECK(ff.apex_of == std::vector<NodeId>{0, 1, 1, 1, 4, 5});
  CHECK(ff.dfs_num == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("folding a star changes nothing") {
  const auto s = test::star(9);
  const auto ff = fold(s);
  CHECK(ff.folded == s);
  for (NodeId v = 1; v <= 9; ++v) CHECK(ff.is_apex(v));
}

TEST_CASE("singleton decomposition") {
  const auto ff = fold(make({0}));
  CHECK(ff.dfs_num[1] == 1);
  CHECK(ff.apex_of[1] == 1);
}

TEST_CASE("fold invariants on all small trees") {
  for (std::size_t n = 1; n <= 8; ++n) {
    enumerate_increasing_trees(n, [&](const RootedForest& f) {
      const auto ff = fold(f);
      std::size_t edges = 0;
      for (NodeId v = 1; v <= n; ++v) {
        edges += !ff.folded.is_root(v);
        REQUIRE((ff.apex_of[v] == v) == ff.is_apex(v));
        // Heavy nodes keep only apex children; an apex holds the rest of its spine.
        for (NodeId c : ff.folded.children(v)) {
          if (!ff.is_apex(v)) REQUIRE(ff.is_apex(c));
          if (!ff.is_apex(c)) REQUIRE(ff.apex_of[c] == v);
        }
        for (NodeId u = 1; u <= n; ++u) {
          // No new ancestry in T*.
          if (folded_ancestor(ff, v, u)) REQUIRE(is_ancestor_oracle(f, v, u));
          // A strict T* ancestor also dominates the apex.
          if (v != u && folded_ancestor(ff, v, u)) REQUIRE(folded_ancestor(ff, v, ff.apex_of[u]));
          // Ancestry in T from T* ancestry, apexes and DFS order.
          const bool via_fold =
              folded_ancestor(ff, v, u) ||
              (ff.apex_of[v] != u && folded_ancestor(ff, ff.apex_of[v], u) && ff.dfs_num[v] < ff.dfs_num[u]);
          REQUIRE(is_ancestor_oracle(f, v, u) == via_fold);
        }
      }
      REQUIRE(edges == n - f.roots().size());
    });
  }
}

TEST_CASE("heavy children in the folded forest") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto ff = fold(test::varied_forest(seed, 500, seed));
    for (NodeId v = 1; v <= ff.folded.size(); ++v) {
      if (!ff.is_apex(v)) {
        CHECK(ff.fold_parent(v) == ff.apex_of[v]);
        CHECK(ff.is_apex(ff.fold_parent(v)));
      }
    }
  }
}

TEST_CASE("ancestry through the fold on random trees") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto f = test::varied_forest(seed, 2000, seed);
    const auto ff = fold(f);
    const AncestorIndex t(f);
    const AncestorIndex star(ff.folded);
    std::mt19937_64 rng(seed);
    for (int q = 0; q < 20000; ++q) {
      auto v = static_cast<NodeId>(1 + uniform_below(rng, f.size()));
      const auto u = static_cast<NodeId>(1 + uniform_below(rng, f.size()));
      if (q % 2) {
        // Bias towards true answers: v becomes an ancestor of u.
        v = u;
        for (auto s = uniform_below(rng, 6); s > 0 && !f.is_root(v); --s) v = f.parent(v);
      }
      const NodeId a = ff.apex_of[v];
      const bool via = star.is_ancestor(v, u) || (a != u && star.is_ancestor(a, u) && ff.dfs_num[v] < ff.dfs_num[u]);
      REQUIRE(t.is_ancestor(v, u) == via);
    }
  }
}

TEST_CASE("apex-first DFS visits apex children before the heavy child") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = test::random_tree(400, seed);
    const auto stats = compute_stats(f);
    const SpineDecomposition dec(f, stats);
    const auto dfs = dfs_apex_first(f, dec);
    for (NodeId v = 1; v <= f.size(); ++v) {
      const NodeId h = dec.heavy_child(v);
      NodeId prev = 0;
      for (NodeId c : f.children(v)) {
        if (c == h) continue;
        if (h) CHECK(dfs[c] < dfs[h]);
        if (prev) CHECK(dfs[prev] < dfs[c]);
        prev = c;
      }
    }
    // The whole chain u_1 < ... < u_t < v_2 < ... < v_s inside each spine scope.
    for (NodeId a = 1; a <= f.size(); ++a) {
      if (!dec.is_apex(a)) continue;
      const auto spine = dec.spine(a);
      std::uint32_t last = dfs[a];
      for (std::size_t i = 1; i < spine.size(); ++i) {
        for (NodeId c : f.children(spine[i - 1])) {
          if (c != spine[i]) CHECK(dfs[c] < dfs[spine[i]]);
        }
        CHECK(dfs[spine[i]] > last);
        last = dfs[spine[i]];
      }
    }
  }
}

TEST_CASE("multi-tree DFS numbering continues in root order") {
  const auto f = make({0, 1, 0, 3, 3});
  const auto ff = fold(f);
  CHECK(ff.dfs_num == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("folded spine depth") {
  // Apex-rooted scopes use the inherited pair; heavy-rooted scopes can reach three.
  for (std::size_t n = 1; n <= 8; ++n) {
    enumerate_increasing_trees(n, [&](const RootedForest& f) {
      const auto ff = fold(f);
      REQUIRE(folded_spine_depth(ff, true) <= 2);
      REQUIRE(folded_spine_depth(ff, false) <= 3);
    });
  }
  std::size_t worst = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto ff = fold(test::varied_forest(seed, 1000, seed));
    CHECK(folded_spine_depth(ff, true) <= 2);
    worst = std::max(worst, folded_spine_depth(ff, false));
  }
  CHECK(worst <= 3);
}

TEST_CASE("a heavy-rooted folded subtree with a spine of three") {
  // A middle spine node whose apex child carries a spine of its own. No tree below
  // 15 nodes has one.
  const auto f = make({0, 1, 2, 2, 1, 3, 3, 4, 3, 8, 9, 7, 12, 11, 10});
  const auto ff = fold(f);
  CHECK(folded_spine_depth(ff, true) <= 2);
  CHECK(folded_spine_depth(ff, false) == 3);
}
