#include "anclab/decomposition.hpp"

#include <algorithm>

namespace anclab {

namespace {

// Child of v heavier than half of root_weight, or 0. At most one child qualifies.
NodeId heavy_child_of(const RootedForest& forest, const TreeStats& stats, NodeId v, std::uint64_t root_weight) {
  for (NodeId c : forest.children(v)) {
    if (2 * std::uint64_t{stats.weight[c]} > root_weight) return c;
  }
  return 0;
}

}  // namespace

Spine compute_spine(const RootedForest& forest, const TreeStats& stats, NodeId root) {
  Spine spine;
  const std::uint64_t root_weight = stats.weight[root];
  for (NodeId v = root; v != 0; v = heavy_child_of(forest, stats, v, root_weight)) {
    spine.nodes.push_back(v);
  }
  return spine;
}

SpineDecomposition::SpineDecomposition(const RootedForest& forest, const TreeStats& stats)
    : class_(forest.size() + 1, NodeClass::kApex),
      spine_apex_(forest.size() + 1, 0),
      heavy_child_(forest.size() + 1, 0),
      spine_last_(forest.size() + 1, 0) {
  std::vector<NodeId> pending(forest.roots().begin(), forest.roots().end());
  while (!pending.empty()) {
    const NodeId apex = pending.back();
    pending.pop_back();
    const std::uint64_t root_weight = stats.weight[apex];
    std::size_t length = 0;
    NodeId v = apex;
    while (true) {
      ++length;
      spine_apex_[v] = apex;
      const NodeId next = heavy_child_of(forest, stats, v, root_weight);
      for (NodeId c : forest.children(v)) {
        if (c != next) pending.push_back(c);
      }
      if (next == 0) break;
      class_[next] = NodeClass::kHeavy;
      heavy_child_[v] = next;
      v = next;
    }
    spine_last_[apex] = v;
    depth_ = std::max(depth_, length);
  }
}

std::vector<NodeId> SpineDecomposition::spine(NodeId apex) const {
  std::vector<NodeId> nodes;
  for (NodeId v = apex; v != 0; v = heavy_child_[v]) nodes.push_back(v);
  return nodes;
}

std::size_t spine_decomposition_depth(const RootedForest& forest) {
  return SpineDecomposition(forest, compute_stats(forest)).depth();
}

std::vector<std::uint32_t> dfs_apex_first(const RootedForest& forest, const SpineDecomposition& spines) {
  std::vector<std::uint32_t> dfs(forest.size() + 1, 0);
  std::uint32_t counter = 0;
  std::vector<NodeId> stack;
  for (NodeId root : forest.roots()) {
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      dfs[v] = ++counter;
      // Pushed in reverse so that APEX children pop in id order and the heavy child last.
      const NodeId heavy = spines.heavy_child(v);
      if (heavy != 0) stack.push_back(heavy);
      const auto kids = forest.children(v);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        if (*it != heavy) stack.push_back(*it);
      }
    }
  }
  return dfs;
}

FoldedForest fold(const RootedForest& forest) {
  const TreeStats stats = compute_stats(forest);
  const SpineDecomposition spines(forest, stats);
  const std::size_t n = forest.size();

  std::vector<NodeId> fold_parents(n);
  std::vector<NodeClass> classes(n + 1, NodeClass::kApex);
  std::vector<NodeId> apex_of(n + 1, 0);
  std::vector<NodeId> spine_last(n + 1, 0);
  for (NodeId v = 1; v <= n; ++v) {
    classes[v] = spines.node_class(v);
    apex_of[v] = spines.spine_apex(v);
    fold_parents[v - 1] = spines.is_apex(v) ? forest.parent(v) : spines.spine_apex(v);
    if (spines.is_apex(v)) spine_last[v] = spines.spine_last(v);
  }
  return FoldedForest{
      .folded = RootedForest(std::move(fold_parents)),
      .node_class = std::move(classes),
      .apex_of = std::move(apex_of),
      .spine_last = std::move(spine_last),
      .dfs_num = dfs_apex_first(forest, spines),
  };
}

}  // namespace anclab
