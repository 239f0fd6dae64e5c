#include <doctest.h>

#include "anclab/aux_schemes.hpp"
#include "anclab/bounded_scheme.hpp"
#include "test_support.hpp"

using namespace anclab;

TEST_CASE("knr on a path") {
  const auto f = test::path(5);
  const auto labels = knr_label(f);
  const KnrDecoder dec(5);
  CHECK(dec.decode(labels[1]) == std::pair<std::uint64_t, std::uint64_t>{1, 5});
  CHECK(dec.decode(labels[5]) == std::pair<std::uint64_t, std::uint64_t>{5, 5});
  CHECK(labels[1].size() == 6);
  CHECK(dec.is_ancestor(labels[1], labels[5]));
  CHECK_FALSE(dec.is_ancestor(labels[5], labels[1]));
}

TEST_CASE("knr length is twice ceil log n") {
  for (std::uint64_t n : {1u, 2u, 3u, 4u, 5u, 1000u, 1024u, 1025u}) {
    CHECK(KnrDecoder(n).label_length() == 2 * ceil_log2(n));
  }
}

TEST_CASE("knr agrees with the oracle") {
  for (std::size_t n = 1; n <= 7; ++n) {
    enumerate_increasing_trees(n, [&](const RootedForest& f) {
      const auto labels = knr_label(f);
      const KnrDecoder dec(n);
      const AncestorIndex oracle(f);
      for (NodeId u = 1; u <= n; ++u)
        for (NodeId v = 1; v <= n; ++v) REQUIRE(dec.is_ancestor(labels[u], labels[v]) == oracle.is_ancestor(u, v));
    });
  }
  const auto f = test::random_tree(400, 9, 3);
  const auto labels = knr_label(f);
  const KnrDecoder dec(400);
  const AncestorIndex oracle(f);
  for (NodeId u = 1; u <= 400; ++u)
    for (NodeId v = 1; v <= 400; ++v) REQUIRE(dec.is_ancestor(labels[u], labels[v]) == oracle.is_ancestor(u, v));
}

TEST_CASE("knr rejects malformed labels") {
  const KnrDecoder dec(5);
  CHECK_THROWS_AS(dec.decode(BitString{}), LabelError);
  BitString backwards;
  backwards.append(3, 3);
  backwards.append(1, 3);
  CHECK_THROWS_AS(dec.decode(backwards), LabelError);
}

TEST_CASE("rand never rejects an ancestor and never accepts a descendant") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto f = test::varied_forest(seed, 60, seed);
    const auto r = rand_label(f, seed);
    const AncestorIndex oracle(f);
    for (NodeId u = 1; u <= f.size(); ++u) {
      for (NodeId v = 1; v <= f.size(); ++v) {
        if (u != v && oracle.is_ancestor(u, v)) {
          REQUIRE(rand_decide(r[u], r[v]));
          REQUIRE_FALSE(rand_decide(r[v], r[u]));
        }
      }
    }
  }
}

TEST_CASE("rand labels are a permutation and deterministic in the seed") {
  const auto f = test::random_tree(100, 1);
  const auto a = rand_label(f, 42);
  const auto b = rand_label(f, 42);
  CHECK(a == b);
  std::vector<bool> seen(101);
  for (NodeId v = 1; v <= 100; ++v) seen[a[v]] = true;
  for (NodeId v = 1; v <= 100; ++v) CHECK(seen[v]);
  CHECK(decode_rand(encode_rand(a[7], 100), 100) == a[7]);
  CHECK(encode_rand(1, 100).size() == 7);
}

TEST_CASE("star siblings are answered right exactly half the time") {
  const auto f = test::star(5);
  std::uint64_t right = 0, total = 0, orderings = 0;
  for_each_child_ordering(f, [&](const std::vector<std::uint32_t>& r) {
    ++orderings;
    for (NodeId u = 2; u <= 5; ++u) {
      for (NodeId v = 2; v <= 5; ++v) {
        if (u == v) continue;
        ++total;
        right += !rand_decide(r[u], r[v]);
      }
    }
  });
  CHECK(orderings == 24);
  CHECK(2 * right == total);
}

TEST_CASE("child ordering count is the product of factorials") {
  const auto f = test::make({0, 1, 1, 1, 2, 2, 0});
  std::uint64_t count = 0;
  for_each_child_ordering(f, [&](const std::vector<std::uint32_t>&) { ++count; });
  CHECK(count == 2 * 6 * 2);
}
