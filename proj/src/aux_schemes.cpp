#include "anclab/aux_schemes.hpp"

#include <algorithm>
#include <random>

#include "anclab/bounded_scheme.hpp"
#include "anclab/generators.hpp"
#include "anclab/params.hpp"

namespace anclab {

namespace {

// Pre-order numbering with explicit child lists; hi receives the last descendant number.
template <class Children>
void number_forest(std::size_t n, std::span<const NodeId> roots, Children children, std::vector<std::uint32_t>& lo,
                   std::vector<std::uint32_t>* hi) {
  lo.assign(n + 1, 0);
  if (hi) hi->assign(n + 1, 0);
  std::uint32_t next = 0;
  std::vector<std::pair<NodeId, std::uint32_t>> stack;
  for (NodeId r : roots) {
    lo[r] = ++next;
    stack.emplace_back(r, 0);
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      const auto kids = children(v);
      if (i < kids.size()) {
        const NodeId c = kids[i++];
        lo[c] = ++next;
        stack.emplace_back(c, 0);
      } else {
        if (hi) (*hi)[v] = next;
        stack.pop_back();
      }
    }
  }
}

unsigned value_width(std::uint64_t n) { return static_cast<unsigned>(ceil_log2(n)); }

}  // namespace

DfsRanges dfs_ranges(const RootedForest& forest) {
  DfsRanges out;
  number_forest(forest.size(), forest.roots(), [&](NodeId v) { return forest.children(v); }, out.lo, &out.hi);
  return out;
}

std::vector<BitString> knr_label(const RootedForest& forest) {
  const DfsRanges r = dfs_ranges(forest);
  const unsigned w = value_width(forest.size());
  std::vector<BitString> out(forest.size() + 1);
  for (NodeId v = 1; v <= forest.size(); ++v) {
    out[v].append(r.lo[v] - 1, w);
    out[v].append(r.hi[v] - 1, w);
  }
  return out;
}

KnrDecoder::KnrDecoder(std::uint64_t n) : n_(n), width_(0) {
  if (n == 0 || n > ParamTable::kMaxN) throw std::invalid_argument("n out of range");
  width_ = value_width(n);
}

std::pair<std::uint64_t, std::uint64_t> KnrDecoder::decode(const BitString& label) const {
  if (label.size() != 2 * width_) throw LabelError("label length does not match n");
  const std::uint64_t lo = label.read(0, width_) + 1;
  const std::uint64_t hi = label.read(width_, width_) + 1;
  if (lo > hi || hi > n_) throw LabelError("range out of order");
  return {lo, hi};
}

bool KnrDecoder::is_ancestor(const BitString& l1, const BitString& l2) const {
  const auto [lo1, hi1] = decode(l1);
  const auto [lo2, hi2] = decode(l2);
  return lo1 <= lo2 && hi2 <= hi1;
}

std::vector<std::uint32_t> rand_label(const RootedForest& forest, std::uint64_t seed) {
  const std::size_t n = forest.size();
  std::mt19937_64 rng(seed);
  auto shuffle = [&](std::vector<NodeId>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[uniform_below(rng, i)]);
  };
  std::vector<NodeId> roots(forest.roots().begin(), forest.roots().end());
  shuffle(roots);
  std::vector<NodeId> order;
  std::vector<std::uint32_t> offset(n + 2, 0);
  order.reserve(n);
  for (NodeId v = 1; v <= n; ++v) {
    offset[v] = static_cast<std::uint32_t>(order.size());
    const auto kids = forest.children(v);
    std::vector<NodeId> tmp(kids.begin(), kids.end());
    shuffle(tmp);
    order.insert(order.end(), tmp.begin(), tmp.end());
  }
  offset[n + 1] = static_cast<std::uint32_t>(order.size());
  std::vector<std::uint32_t> lo;
  number_forest(
      n, roots, [&](NodeId v) { return std::span<const NodeId>(order.data() + offset[v], offset[v + 1] - offset[v]); },
      lo, nullptr);
  return lo;
}

void for_each_child_ordering(const RootedForest& forest,
                             const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  const std::size_t n = forest.size();
  // Group 0 holds the roots, group v the children of v. Each group is permuted in place.
  std::vector<std::vector<NodeId>> groups(n + 1);
  groups[0].assign(forest.roots().begin(), forest.roots().end());
  for (NodeId v = 1; v <= n; ++v) groups[v].assign(forest.children(v).begin(), forest.children(v).end());
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::vector<std::uint32_t> lo;
  auto children = [&](NodeId v) { return std::span<const NodeId>(groups[v]); };
  while (true) {
    number_forest(n, groups[0], children, lo, nullptr);
    visit(lo);
    std::size_t g = 0;
    while (g <= n && !std::next_permutation(groups[g].begin(), groups[g].end())) ++g;
    if (g > n) break;
  }
}

BitString encode_rand(std::uint32_t value, std::uint64_t n) {
  BitString out;
  out.append(value - 1, value_width(n));
  return out;
}

std::uint32_t decode_rand(const BitString& label, std::uint64_t n) {
  if (label.size() != value_width(n)) throw LabelError("label length does not match n");
  const auto value = static_cast<std::uint32_t>(label.read(0, label.size())) + 1;
  if (value > n) throw LabelError("value out of range");
  return value;
}

}  // namespace anclab
