#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "anclab/forest.hpp"

namespace anclab {

enum class NodeClass : std::uint8_t { kApex, kHeavy };

/// One spine: v_1 is the root of the current recursion tree, v_{j} a child of v_{j-1},
/// each v_j (j >= 2) heavier than half of v_1. The hanging forest F_i of v_i is
/// children(v_i) without v_{i+1}.
struct Spine {
  std::vector<NodeId> nodes;
};

/// Spine of the subtree rooted at root under the generic weight rule.
Spine compute_spine(const RootedForest& forest, const TreeStats& stats, NodeId root);

/// The full recursive spine decomposition of a forest.
class SpineDecomposition {
 public:
  SpineDecomposition(const RootedForest& forest, const TreeStats& stats);

  NodeClass node_class(NodeId v) const { return class_[v]; }
  bool is_apex(NodeId v) const { return class_[v] == NodeClass::kApex; }
  /// Root of the recursion tree whose spine holds v (v itself for apexes).
  NodeId spine_apex(NodeId v) const { return spine_apex_[v]; }
  /// Next node on v's spine, 0 at the spine end.
  NodeId heavy_child(NodeId v) const { return heavy_child_[v]; }
  /// v_s of the spine rooted at apex a.
  NodeId spine_last(NodeId a) const { return spine_last_[a]; }
  std::vector<NodeId> spine(NodeId apex) const;
  /// Maximal spine size over the whole decomposition.
  std::size_t depth() const { return depth_; }

 private:
  std::vector<NodeClass> class_;
  std::vector<NodeId> spine_apex_;
  std::vector<NodeId> heavy_child_;
  std::vector<NodeId> spine_last_;
  std::size_t depth_ = 0;
};

std::size_t spine_decomposition_depth(const RootedForest& forest);

/// Folding decomposition T*: heavy spine nodes are re-hung below their apex.
struct FoldedForest {
  RootedForest folded;                 // T* on the same node ids
  std::vector<NodeClass> node_class;   // slot 0 unused
  std::vector<NodeId> apex_of;         // nearest APEX ancestor in T (v itself when APEX)
  std::vector<NodeId> spine_last;      // for APEX v: last node of its spine
  std::vector<std::uint32_t> dfs_num;  // apex-first DFS numbering of the original forest

  NodeId fold_parent(NodeId v) const { return folded.parent(v); }
  bool is_apex(NodeId v) const { return node_class[v] == NodeClass::kApex; }
};

FoldedForest fold(const RootedForest& forest);

/// Pre-order numbers of T starting at 1, APEX children in id order before the heavy child;
/// trees are numbered consecutively in root-id order.
std::vector<std::uint32_t> dfs_apex_first(const RootedForest& forest, const SpineDecomposition& spines);

}  // namespace anclab
