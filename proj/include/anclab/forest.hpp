#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace anclab {

/// Dense 1-based node identifier. 0 is the root sentinel in parent arrays.
using NodeId = std::uint32_t;
inline constexpr NodeId kNoParent = 0;

class ForestError : public std::runtime_error {
 public:
  ForestError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A forest of rooted trees stored as a parent array with materialized child lists.
/// Immutable after construction.
class RootedForest {
 public:
  /// parents[i] is the parent of node i+1, or kNoParent for a root.
  /// Throws ForestError on cycles, dangling references and empty input.
  explicit RootedForest(std::vector<NodeId> parents);

  std::size_t size() const { return parent_.size() - 1; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  bool is_root(NodeId v) const { return parent_[v] == kNoParent; }
  std::span<const NodeId> roots() const { return roots_; }
  std::span<const NodeId> children(NodeId v) const {
    return {child_list_.data() + child_offset_[v], child_offset_[v + 1] - child_offset_[v]};
  }
  /// Parent array without the leading slot, i.e. the constructor argument.
  std::vector<NodeId> parents() const { return {parent_.begin() + 1, parent_.end()}; }
  /// Nodes in breadth-first order from the roots; parents precede children.
  std::span<const NodeId> top_down_order() const { return order_; }

  bool operator==(const RootedForest& other) const { return parent_ == other.parent_; }

 private:
  std::vector<NodeId> parent_;  // slot 0 unused
  std::vector<NodeId> roots_;
  std::vector<std::uint32_t> child_offset_;
  std::vector<NodeId> child_list_;
  std::vector<NodeId> order_;
};

struct TreeStats {
  std::vector<std::uint32_t> weight;  // subtree size, slot 0 unused
  std::vector<std::uint32_t> depth;   // roots have depth 1
  std::uint32_t forest_depth = 0;
};

TreeStats compute_stats(const RootedForest& forest);

/// Parses the parent-array text format: n, then one parent per line (0 = root).
RootedForest parse_forest(std::string_view text);
std::string serialize_forest(const RootedForest& forest);

/// position[v] for a pre-order walk visiting roots and children in id order, from 1.
/// Renumbering by it keeps every child list and the root list in the same order.
std::vector<NodeId> preorder_ids(const RootedForest& forest);

/// Forest with node v renamed to new_id[v]; new_id must be a permutation of [1, n].
RootedForest relabel(const RootedForest& forest, std::span<const NodeId> new_id);

/// Brute-force ancestry test by walking the parent chain of v. A node is its own ancestor.
bool is_ancestor_oracle(const RootedForest& forest, NodeId u, NodeId v);

/// Pre/post-order index answering ancestry in O(1); used where the parent walk is too slow.
class AncestorIndex {
 public:
  explicit AncestorIndex(const RootedForest& forest);
  bool is_ancestor(NodeId u, NodeId v) const { return enter_[u] <= enter_[v] && exit_[v] <= exit_[u]; }

 private:
  std::vector<std::uint32_t> enter_;
  std::vector<std::uint32_t> exit_;
};

/// Calls visit once per parent array with parent(1) = root and parent(i) in [1, i-1].
/// Yields (n-1)! trees; 1 <= n <= 9.
void enumerate_increasing_trees(std::size_t n, const std::function<void(const RootedForest&)>& visit);

}  // namespace anclab
