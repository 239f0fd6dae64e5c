#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "anclab/decomposition.hpp"
#include "anclab/forest.hpp"
#include "anclab/interval.hpp"
#include "anclab/params.hpp"

namespace anclab {

/// Integer range [lo, hi) reserved for the intervals of one forest.
struct Bin {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t size() const { return hi - lo; }
};

/// Forest as seen by the interval assigner: child lists and roots sorted by an
/// order policy, plus subtree weights.
class LayoutForest {
 public:
  /// Orders roots and children by ascending rank[v]; an empty rank keeps id order.
  explicit LayoutForest(const RootedForest& forest, std::span<const std::uint32_t> rank = {});

  std::size_t size() const { return weight_.size() - 1; }
  std::span<const NodeId> roots() const { return roots_; }
  std::span<const NodeId> children(NodeId v) const {
    return {child_list_.data() + child_offset_[v], child_offset_[v + 1] - child_offset_[v]};
  }
  std::uint32_t weight(NodeId v) const { return weight_[v]; }

 private:
  std::vector<NodeId> roots_;
  std::vector<std::uint32_t> child_offset_;
  std::vector<NodeId> child_list_;
  std::vector<std::uint32_t> weight_;
};

/// Chooses the spine (root first) used to split the subtree at root.
class SpineSource {
 public:
  virtual ~SpineSource() = default;
  virtual void spine(const LayoutForest& forest, NodeId root, std::vector<NodeId>& out) const = 0;
};

/// Generic rule: descend while a child outweighs half of the root.
class WeightSpine final : public SpineSource {
 public:
  void spine(const LayoutForest& forest, NodeId root, std::vector<NodeId>& out) const override;
};

/// Spines for a folded forest T*. A subtree rooted at an APEX v_1 uses the pair
/// (v_1, v_s) inherited from the original spine, or (v_1) when s = 1. Subtrees of
/// T* rooted at a heavy node fall back to the generic rule on T*, which can give
/// spines of three nodes.
class FoldedSpine final : public SpineSource {
 public:
  explicit FoldedSpine(const FoldedForest& folded) : folded_(&folded) {}
  void spine(const LayoutForest& forest, NodeId root, std::vector<NodeId>& out) const override;

 private:
  const FoldedForest* folded_;
};

struct IntervalAssignment {
  std::vector<Interval> interval;  // slot 0 unused
  const Interval& operator[](NodeId v) const { return interval[v]; }
};

/// Raised when a produced interval escapes its bin or its (a, b) ranges. This means
/// the parameter arithmetic was violated and is never expected for valid inputs.
class AssignmentError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Recursive legal-containment mapping of a forest into level-k intervals.
class IntervalAssigner {
 public:
  IntervalAssigner(const LayoutForest& forest, const ParamTable& params, const SpineSource& spines);

  /// Maps the whole forest into the top bin [1, floor(c_K n) + 1).
  IntervalAssignment assign_all();

  /// Tree at root with 2^(k-1) < |T| <= 2^k (or |T| <= 2 at k = 1) into J.
  void assign_tree(NodeId root, Bin J, int k);
  /// Trees laid out left to right, each in a sub-bin of floor(c_l |T|) at its minimal level l.
  void assign_forest(std::span<const NodeId> roots, Bin J);

  const IntervalAssignment& result() const { return out_; }
  IntervalAssignment take() { return std::move(out_); }

 private:
  // Lays out children(v) except skip; returns the end of the used range.
  std::int64_t assign_hanging(NodeId v, NodeId skip, std::int64_t lo, std::int64_t hi);
  void place_tree(NodeId root, std::int64_t lo, std::int64_t hi);
  void set(NodeId v, Interval interval, const Bin& J);

  const LayoutForest& forest_;
  const ParamTable& params_;
  const SpineSource& spines_;
  IntervalAssignment out_;
  std::vector<NodeId> spine_buffer_;
  std::vector<std::int64_t> b_buffer_;
};

/// Convenience wrapper around IntervalAssigner::assign_all.
IntervalAssignment assign_intervals(const LayoutForest& forest, const ParamTable& params, const SpineSource& spines);

struct ContainmentCheck {
  bool ok = true;
  NodeId u = 0;
  NodeId v = 0;
  std::string reason;
};

/// Checks injectivity and u ancestor of v <=> I(v) within I(u) over all ordered pairs.
ContainmentCheck verify_legal_containment(const RootedForest& forest, const ParamTable& params,
                                          const IntervalAssignment& assignment);

}  // namespace anclab
