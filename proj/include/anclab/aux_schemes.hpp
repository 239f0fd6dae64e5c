#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "anclab/bits.hpp"
#include "anclab/forest.hpp"

namespace anclab {

/// Pre-order DFS numbers (from 1) visiting roots and children in id order, and the
/// number of the last descendant.
struct DfsRanges {
  std::vector<std::uint32_t> lo;  // slot 0 unused
  std::vector<std::uint32_t> hi;
};
DfsRanges dfs_ranges(const RootedForest& forest);

/// Classical interval scheme: lo-1 and hi-1 in ceil(log2 n) bits each.
std::vector<BitString> knr_label(const RootedForest& forest);

class KnrDecoder {
 public:
  explicit KnrDecoder(std::uint64_t n);
  unsigned label_length() const { return 2 * width_; }
  /// (lo, hi) of the encoded range. Throws LabelError.
  std::pair<std::uint64_t, std::uint64_t> decode(const BitString& label) const;
  bool is_ancestor(const BitString& l1, const BitString& l2) const;

 private:
  std::uint64_t n_;
  unsigned width_;
};

/// DFS numbers under child orders shuffled uniformly by Fisher-Yates over
/// std::mt19937_64 seeded with seed. Root order is shuffled the same way.
std::vector<std::uint32_t> rand_label(const RootedForest& forest, std::uint64_t seed);

/// One-sided decision: accepts iff i < j. Never rejects a strict ancestor pair.
constexpr bool rand_decide(std::uint32_t i, std::uint32_t j) { return i < j; }

/// Calls visit with the DFS numbering of every combination of child orders (roots
/// included); prod over nodes of children! calls.
void for_each_child_ordering(const RootedForest& forest,
                             const std::function<void(const std::vector<std::uint32_t>&)>& visit);

/// value-1 in ceil(log2 n) bits.
BitString encode_rand(std::uint32_t value, std::uint64_t n);
std::uint32_t decode_rand(const BitString& label, std::uint64_t n);

}  // namespace anclab
