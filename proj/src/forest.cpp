#include "anclab/forest.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

namespace anclab {

namespace {

// Line of node v in the parent-array file format (line 1 holds n).
std::size_t line_of(NodeId v) { return static_cast<std::size_t>(v) + 1; }

}  // namespace

RootedForest::RootedForest(std::vector<NodeId> parents) {
  if (parents.empty()) throw ForestError("empty forest", 0);
  const std::size_t n = parents.size();
  if (n >= std::numeric_limits<NodeId>::max()) throw ForestError("forest too large", 0);

  parent_.resize(n + 1);
  parent_[0] = kNoParent;
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId p = parents[i];
    const auto v = static_cast<NodeId>(i + 1);
    if (p > n)
      throw ForestError("dangling parent reference " + std::to_string(p) + " of node " + std::to_string(v), line_of(v));
    if (p == v) throw ForestError("cycle: node " + std::to_string(v) + " is its own parent", line_of(v));
    parent_[v] = p;
  }

  // 0 = unvisited, 1 = on the current walk, 2 = reaches a root.
  std::vector<std::uint8_t> state(n + 1, 0);
  std::vector<NodeId> walk;
  for (NodeId start = 1; start <= n; ++start) {
    walk.clear();
    NodeId v = start;
    while (v != kNoParent && state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = parent_[v];
    }
    if (v != kNoParent && state[v] == 1) {
      throw ForestError("cycle through node " + std::to_string(v), line_of(v));
    }
    for (NodeId w : walk) state[w] = 2;
  }

  child_offset_.assign(n + 2, 0);
  for (NodeId v = 1; v <= n; ++v) {
    if (parent_[v] == kNoParent) {
      roots_.push_back(v);
    } else {
      ++child_offset_[parent_[v] + 1];
    }
  }
  std::partial_sum(child_offset_.begin(), child_offset_.end(), child_offset_.begin());
  child_list_.resize(n - roots_.size());
  std::vector<std::uint32_t> fill(child_offset_.begin(), child_offset_.end() - 1);
  for (NodeId v = 1; v <= n; ++v) {
    if (parent_[v] != kNoParent) child_list_[fill[parent_[v]]++] = v;
  }

  order_.reserve(n);
  order_.insert(order_.end(), roots_.begin(), roots_.end());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    for (NodeId c : children(order_[i])) order_.push_back(c);
  }
}

TreeStats compute_stats(const RootedForest& forest) {
  const std::size_t n = forest.size();
  TreeStats stats;
  stats.weight.assign(n + 1, 1);
  stats.weight[0] = 0;
  stats.depth.assign(n + 1, 0);
  const auto order = forest.top_down_order();
  for (NodeId v : order) {
    stats.depth[v] = forest.is_root(v) ? 1 : stats.depth[forest.parent(v)] + 1;
    stats.forest_depth = std::max(stats.forest_depth, stats.depth[v]);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (!forest.is_root(*it)) stats.weight[forest.parent(*it)] += stats.weight[*it];
  }
  return stats;
}

RootedForest parse_forest(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  // Returns the next non-blank line, trimmed; sets line_no.
  auto next_line = [&](std::string_view& out) -> bool {
    while (pos < text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
      while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.remove_suffix(1);
      if (!line.empty()) {
        out = line;
        return true;
      }
    }
    return false;
  };
  auto to_int = [&](std::string_view s) -> std::uint64_t {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw ForestError("not a non-negative integer: '" + std::string(s) + "'", line_no);
    return value;
  };

  std::string_view line;
  if (!next_line(line)) throw ForestError("empty input", 0);
  const std::uint64_t n = to_int(line);
  if (n == 0) throw ForestError("node count must be at least 1", line_no);
  if (n >= std::numeric_limits<NodeId>::max()) throw ForestError("node count too large", line_no);

  std::vector<NodeId> parents;
  parents.reserve(n);
  std::vector<std::size_t> lines;
  lines.reserve(n);
  while (parents.size() < n) {
    if (!next_line(line))
      throw ForestError("expected " + std::to_string(n) + " parent entries, got " + std::to_string(parents.size()),
                        line_no);
    const std::uint64_t p = to_int(line);
    if (p > n) throw ForestError("dangling parent reference " + std::to_string(p), line_no);
    parents.push_back(static_cast<NodeId>(p));
    lines.push_back(line_no);
  }
  if (next_line(line)) throw ForestError("trailing content after " + std::to_string(n) + " entries", line_no);

  try {
    return RootedForest(std::move(parents));
  } catch (const ForestError& e) {
    // Remap the node-based line to the physical line in this text.
    const std::size_t node = e.line() > 0 ? e.line() - 1 : 0;
    const std::string what = e.what();
    const std::string message = what.substr(0, what.rfind(" (line"));
    throw ForestError(message, node >= 1 && node <= lines.size() ? lines[node - 1] : 0);
  }
}

std::string serialize_forest(const RootedForest& forest) {
  std::string out = std::to_string(forest.size());
  for (NodeId v = 1; v <= forest.size(); ++v) {
    out += '\n';
    out += std::to_string(forest.parent(v));
  }
  return out;
}

bool is_ancestor_oracle(const RootedForest& forest, NodeId u, NodeId v) {
  if (u == 0 || v == 0 || u > forest.size() || v > forest.size()) {
    throw std::out_of_range("node id out of range");
  }
  for (NodeId w = v; w != kNoParent; w = forest.parent(w)) {
    if (w == u) return true;
  }
  return false;
}

std::vector<NodeId> preorder_ids(const RootedForest& forest) {
  std::vector<NodeId> position(forest.size() + 1, 0);
  NodeId next = 0;
  std::vector<NodeId> stack;
  for (NodeId root : forest.roots()) {
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      position[v] = ++next;
      const auto kids = forest.children(v);
      stack.insert(stack.end(), kids.rbegin(), kids.rend());
    }
  }
  return position;
}

RootedForest relabel(const RootedForest& forest, std::span<const NodeId> new_id) {
  const std::size_t n = forest.size();
  if (new_id.size() != n + 1) throw std::invalid_argument("relabel: permutation has the wrong size");
  std::vector<NodeId> parents(n, kNoParent);
  std::vector<bool> used(n + 1, false);
  for (NodeId v = 1; v <= n; ++v) {
    const NodeId id = new_id[v];
    if (id < 1 || id > n || used[id]) throw std::invalid_argument("relabel: not a permutation");
    used[id] = true;
    parents[id - 1] = forest.is_root(v) ? kNoParent : new_id[forest.parent(v)];
  }
  return RootedForest(std::move(parents));
}

AncestorIndex::AncestorIndex(const RootedForest& forest) : enter_(forest.size() + 1), exit_(forest.size() + 1) {
  std::uint32_t clock = 0;
  std::vector<std::pair<NodeId, std::uint32_t>> stack;
  for (NodeId root : forest.roots()) {
    stack.emplace_back(root, 0);
    enter_[root] = clock++;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto kids = forest.children(v);
      if (next < kids.size()) {
        const NodeId c = kids[next++];
        enter_[c] = clock++;
        stack.emplace_back(c, 0);
      } else {
        exit_[v] = clock++;
        stack.pop_back();
      }
    }
  }
}

void enumerate_increasing_trees(std::size_t n, const std::function<void(const RootedForest&)>& visit) {
  if (n < 1 || n > 9) throw std::invalid_argument("enumerate_increasing_trees: n must be in [1, 9]");
  std::vector<NodeId> parents(n, 1);
  parents[0] = kNoParent;
  while (true) {
    visit(RootedForest(parents));
    // Odometer over parent(i) in [1, i-1] for nodes i = n down to 2.
    std::size_t i = n;
    while (i >= 2) {
      if (parents[i - 1] < i - 1) {
        ++parents[i - 1];
        break;
      }
      parents[i - 1] = 1;
      --i;
    }
    if (i < 2) return;
  }
}

}  // namespace anclab
