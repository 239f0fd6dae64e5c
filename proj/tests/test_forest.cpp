#include <doctest.h>

#include <set>

#include "anclab/forest.hpp"
#include "test_support.hpp"

using namespace anclab;
using anclab::test::make;

TEST_CASE("stats of a path") {
  const auto s = compute_stats(test::path(5));
  CHECK(s.weight == std::vector<std::uint32_t>{0, 5, 4, 3, 2, 1});
  CHECK(s.depth == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5});
  CHECK(s.forest_depth == 5);
}

TEST_CASE("stats of a singleton and a complete binary tree") {
  const auto single = compute_stats(make({0}));
  CHECK(single.weight[1] == 1);
  CHECK(single.depth[1] == 1);

  const auto bin = compute_stats(test::complete_binary(7));
  CHECK(bin.weight[1] == 7);
  for (NodeId leaf = 4; leaf <= 7; ++leaf) CHECK(bin.weight[leaf] == 1);
  CHECK(bin.forest_depth == 3);
}

TEST_CASE("weights add up over children and roots") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = test::random_tree(200, seed, 1 + seed % 4);
    const auto s = compute_stats(f);
    std::uint64_t root_total = 0;
    for (NodeId r : f.roots()) root_total += s.weight[r];
    CHECK(root_total == f.size());
    for (NodeId v = 1; v <= f.size(); ++v) {
      std::uint64_t sum = 1;
      for (NodeId c : f.children(v)) sum += s.weight[c];
      CHECK(s.weight[v] == sum);
    }
  }
}

TEST_CASE("oracle answers on small shapes") {
  const auto p = test::path(5);
  CHECK(is_ancestor_oracle(p, 1, 5));
  CHECK_FALSE(is_ancestor_oracle(p, 5, 1));
  CHECK(is_ancestor_oracle(p, 3, 3));
  const auto s = test::star(4);
  CHECK_FALSE(is_ancestor_oracle(s, 2, 3));
  CHECK_FALSE(is_ancestor_oracle(s, 3, 2));
  CHECK_THROWS_AS(is_ancestor_oracle(p, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(is_ancestor_oracle(p, 1, 6), std::out_of_range);
}

TEST_CASE("oracle is a partial order on every small tree") {
  for (std::size_t n = 1; n <= 7; ++n) {
    enumerate_increasing_trees(n, [&](const RootedForest& f) {
      for (NodeId u = 1; u <= n; ++u) {
        CHECK(is_ancestor_oracle(f, u, u));
        for (NodeId v = 1; v <= n; ++v) {
          if (u != v && is_ancestor_oracle(f, u, v)) CHECK_FALSE(is_ancestor_oracle(f, v, u));
          for (NodeId w = 1; w <= n; ++w) {
            if (is_ancestor_oracle(f, u, v) && is_ancestor_oracle(f, v, w)) CHECK(is_ancestor_oracle(f, u, w));
          }
        }
      }
    });
  }
}

TEST_CASE("pre/post index agrees with the parent walk") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = test::random_tree(120, seed, 2);
    const AncestorIndex index(f);
    for (NodeId u = 1; u <= f.size(); ++u) {
      for (NodeId v = 1; v <= f.size(); ++v) REQUIRE(index.is_ancestor(u, v) == is_ancestor_oracle(f, u, v));
    }
  }
}

TEST_CASE("enumeration counts") {
  const std::size_t expected[] = {0, 1, 1, 2, 6, 24, 120, 720, 5040};
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t count = 0;
    enumerate_increasing_trees(n, [&](const RootedForest& f) {
      CHECK(f.size() == n);
      CHECK(f.roots().size() == 1);
      ++count;
    });
    CHECK(count == expected[n]);
  }
  std::set<std::vector<NodeId>> shapes;
  enumerate_increasing_trees(3, [&](const RootedForest& f) { shapes.insert(f.parents()); });
  CHECK(shapes == std::set<std::vector<NodeId>>{{0, 1, 1}, {0, 1, 2}});
  CHECK_THROWS(enumerate_increasing_trees(0, [](const RootedForest&) {}));
  CHECK_THROWS(enumerate_increasing_trees(10, [](const RootedForest&) {}));
}

TEST_CASE("serialize and parse") {
  CHECK(serialize_forest(make({0})) == "1\n0");
  const auto p = test::path(5);
  CHECK(parse_forest(serialize_forest(p)) == p);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto f = test::random_tree(3 + seed % 40, seed, 1 + seed % 3);
    const std::string text = serialize_forest(f);
    CHECK(serialize_forest(parse_forest(text)) == text);
  }
}

TEST_CASE("parser tolerates whitespace and CRLF") {
  const auto f = parse_forest("  3\r\n0 \r\n\t1\r\n\r\n 1\r\n");
  CHECK(f.parents() == std::vector<NodeId>{0, 1, 1});
}

TEST_CASE("parser rejects bad input with a line number") {
  CHECK_THROWS_AS(parse_forest(""), ForestError);
  CHECK_THROWS_AS(parse_forest("0\n"), ForestError);
  CHECK_THROWS_AS(parse_forest("2\n0\n"), ForestError);
  CHECK_THROWS_AS(parse_forest("2\n0\n1\n1\n"), ForestError);
  try {
    parse_forest("3\n0\n5\n1\n");
    FAIL("dangling parent accepted");
  } catch (const ForestError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_forest("3\n0\n3\n2\n");
    FAIL("cycle accepted");
  } catch (const ForestError& e) {
    CHECK(e.line() >= 3);
  }
  try {
    parse_forest("2\n0\nx\n");
    FAIL("garbage accepted");
  } catch (const ForestError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_forest("1\n1\n"), ForestError);
}

TEST_CASE("forest constructor validation") {
  CHECK_THROWS_AS(RootedForest({}), ForestError);
  CHECK_THROWS_AS(RootedForest({2, 1}), ForestError);
  CHECK_THROWS_AS(RootedForest({0, 3}), ForestError);
  const auto f = make({0, 1, 0, 3});
  CHECK(f.roots().size() == 2);
  CHECK(f.children(1).size() == 1);
  CHECK(f.is_root(3));
}

TEST_CASE("pre-order renumbering") {
  // 1 has children 2 and 4, 2 has child 3; 5 is a second root.
  const auto f = make({0, 1, 2, 1, 0});
  const auto pos = preorder_ids(f);
  CHECK(pos == std::vector<NodeId>{0, 1, 2, 3, 4, 5});
  const auto g = make({0, 0, 1, 2, 1});
  CHECK(preorder_ids(g) == std::vector<NodeId>{0, 1, 4, 2, 5, 3});
  const auto r = relabel(g, preorder_ids(g));
  CHECK(r.parents() == std::vector<NodeId>{0, 1, 1, 0, 4});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto h = test::random_tree(200, seed, 1 + seed % 4);
    const auto p = preorder_ids(h);
    const auto renamed = relabel(h, p);
    const AncestorIndex before(h), after(renamed);
    for (NodeId u = 1; u <= 200; u += 7)
      for (NodeId v = 1; v <= 200; ++v) REQUIRE(before.is_ancestor(u, v) == after.is_ancestor(p[u], p[v]));
    for (NodeId v = 1; v <= 200; ++v) {
      if (!renamed.is_root(v)) REQUIRE(renamed.parent(v) < v);
    }
  }
  const std::vector<NodeId> bad{0, 1, 1, 2, 3, 4};
  CHECK_THROWS_AS(relabel(g, bad), std::invalid_argument);
  CHECK_THROWS_AS(relabel(g, std::vector<NodeId>{0, 1}), std::invalid_argument);
}
