#include "anclab/assignment.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace anclab {

LayoutForest::LayoutForest(const RootedForest& forest, std::span<const std::uint32_t> rank) {
  const std::size_t n = forest.size();
  const TreeStats stats = compute_stats(forest);
  weight_ = stats.weight;
  roots_.assign(forest.roots().begin(), forest.roots().end());
  child_offset_.assign(n + 2, 0);
  child_list_.reserve(n);
  for (NodeId v = 1; v <= n; ++v) {
    child_offset_[v] = static_cast<std::uint32_t>(child_list_.size());
    const auto kids = forest.children(v);
    child_list_.insert(child_list_.end(), kids.begin(), kids.end());
  }
  child_offset_[n + 1] = static_cast<std::uint32_t>(child_list_.size());
  if (!rank.empty()) {
    auto by_rank = [&](NodeId a, NodeId b) { return rank[a] < rank[b]; };
    std::sort(roots_.begin(), roots_.end(), by_rank);
    for (NodeId v = 1; v <= n; ++v) {
      std::sort(child_list_.begin() + child_offset_[v], child_list_.begin() + child_offset_[v + 1], by_rank);
    }
  }
}

void WeightSpine::spine(const LayoutForest& forest, NodeId root, std::vector<NodeId>& out) const {
  const std::uint64_t root_weight = forest.weight(root);
  NodeId v = root;
  while (v != 0) {
    out.push_back(v);
    NodeId next = 0;
    for (NodeId c : forest.children(v)) {
      if (2 * std::uint64_t{forest.weight(c)} > root_weight) {
        next = c;
        break;
      }
    }
    v = next;
  }
}

void FoldedSpine::spine(const LayoutForest& forest, NodeId root, std::vector<NodeId>& out) const {
  if (!folded_->is_apex(root)) {
    WeightSpine{}.spine(forest, root, out);
    return;
  }
  out.push_back(root);
  const NodeId last = folded_->spine_last[root];
  if (last != root) out.push_back(last);
}

IntervalAssigner::IntervalAssigner(const LayoutForest& forest, const ParamTable& params, const SpineSource& spines)
    : forest_(forest), params_(params), spines_(spines) {
  if (forest.size() > params.n()) throw std::invalid_argument("forest has more nodes than the parameter table allows");
  out_.interval.assign(forest.size() + 1, Interval{});
}

IntervalAssignment IntervalAssigner::assign_all() {
  const std::int64_t top = params_.floor_c_times(params_.max_level(), params_.n());
  assign_forest(forest_.roots(), Bin{1, 1 + top});
  return take();
}

void IntervalAssigner::set(NodeId v, Interval interval, const Bin& J) {
  if (!in_range(params_, interval)) {
    throw AssignmentError("interval of node " + std::to_string(v) + " leaves the level-" +
                          std::to_string(interval.level) + " (a, b) ranges");
  }
  const Span span = interval_bounds(params_, interval);
  if (span.lo < J.lo || span.hi > J.hi || span.hi > params_.N()) {
    throw AssignmentError("interval of node " + std::to_string(v) + " overflows its bin");
  }
  out_.interval[v] = interval;
}

void IntervalAssigner::place_tree(NodeId root, std::int64_t lo, std::int64_t hi) {
  const std::uint32_t size = forest_.weight(root);
  const int level = ParamTable::min_level(size);
  const std::int64_t len = params_.floor_c_times(level, size);
  if (lo + len > hi)
    throw AssignmentError("sub-bin of tree at node " + std::to_string(root) + " overflows its forest bin");
  assign_tree(root, Bin{lo, lo + len}, level);
}

std::int64_t IntervalAssigner::assign_hanging(NodeId v, NodeId skip, std::int64_t lo, std::int64_t hi) {
  for (NodeId c : forest_.children(v)) {
    if (c == skip) continue;
    const std::uint32_t size = forest_.weight(c);
    const std::int64_t len = params_.floor_c_times(ParamTable::min_level(size), size);
    place_tree(c, lo, hi);
    lo += len;
  }
  return lo;
}

void IntervalAssigner::assign_forest(std::span<const NodeId> roots, Bin J) {
  std::int64_t lo = J.lo;
  for (NodeId r : roots) {
    const std::uint32_t size = forest_.weight(r);
    place_tree(r, lo, J.hi);
    lo += params_.floor_c_times(ParamTable::min_level(size), size);
  }
}

void IntervalAssigner::assign_tree(NodeId root, Bin J, int k) {
  const std::uint32_t size = forest_.weight(root);
  if (k == 1) {
    if (size > 2) throw AssignmentError("level-1 tree larger than 2 nodes");
    set(root, Interval{1, J.lo, static_cast<std::int64_t>(size)}, J);
    if (size == 2) set(forest_.children(root)[0], Interval{1, J.lo + 1, 1}, J);
    return;
  }

  // The spine buffer is shared across recursion levels; this call owns [base, end).
  const std::size_t base = spine_buffer_.size();
  spines_.spine(forest_, root, spine_buffer_);
  const std::size_t s = spine_buffer_.size() - base;
  if (s > params_.d()) {
    throw AssignmentError("spine of length " + std::to_string(s) + " exceeds d = " + std::to_string(params_.d()));
  }

  const std::int64_t x = params_.x(k);
  std::int64_t a = (J.lo + x - 1) / x;
  const std::int64_t a_first = a;
  const std::size_t b_base = b_buffer_.size();
  for (std::size_t i = 0; i < s; ++i) {
    const NodeId v = spine_buffer_[base + i];
    const NodeId next = i + 1 < s ? spine_buffer_[base + i + 1] : 0;
    const std::uint64_t hanging = forest_.weight(v) - 1 - (next ? forest_.weight(next) : 0);
    const std::int64_t len = params_.floor_c_times(k - 1, hanging);
    const std::int64_t start = a * x;
    assign_hanging(v, next, start, start + len);
    // Strictly wider than the hanging bin, so a single hanging tree filling its bin
    // cannot share the interval of v. Also gives empty hanging forests one unit.
    const std::int64_t b = len / x + 1;
    b_buffer_.push_back(b);
    a += b;
  }

  std::int64_t suffix = 0;
  for (std::size_t i = s; i-- > 0;) {
    suffix += b_buffer_[b_base + i];
    b_buffer_[b_base + i] = suffix;
  }
  a = a_first;
  for (std::size_t i = 0; i < s; ++i) {
    const std::int64_t b_hat = b_buffer_[b_base + i];
    set(spine_buffer_[base + i], Interval{k, a, b_hat}, J);
    a += b_hat - (i + 1 < s ? b_buffer_[b_base + i + 1] : 0);
  }
  spine_buffer_.resize(base);
  b_buffer_.resize(b_base);
}

IntervalAssignment assign_intervals(const LayoutForest& forest, const ParamTable& params, const SpineSource& spines) {
  IntervalAssigner assigner(forest, params, spines);
  return assigner.assign_all();
}

ContainmentCheck verify_legal_containment(const RootedForest& forest, const ParamTable& params,
                                          const IntervalAssignment& assignment) {
  const std::size_t n = forest.size();
  std::vector<Span> spans(n + 1);
  for (NodeId v = 1; v <= n; ++v) {
    if (!in_range(params, assignment[v])) return {false, v, v, "interval out of range"};
    spans[v] = interval_bounds(params, assignment[v]);
  }
  std::set<Span> seen;
  for (NodeId v = 1; v <= n; ++v) {
    if (!seen.insert(spans[v]).second) {
      for (NodeId u = 1; u < v; ++u) {
        if (spans[u] == spans[v]) return {false, u, v, "two nodes share one interval"};
      }
    }
  }
  const AncestorIndex oracle(forest);
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = 1; v <= n; ++v) {
      const bool truth = oracle.is_ancestor(u, v);
      if (truth != contains(spans[u], spans[v])) {
        return {false, u, v, truth ? "ancestor interval does not contain descendant" : "containment without ancestry"};
      }
    }
  }
  return {};
}

}  // namespace anclab
