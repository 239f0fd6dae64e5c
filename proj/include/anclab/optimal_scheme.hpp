#pragma once

#include <cstdint>
#include <vector>

#include "anclab/assignment.hpp"
#include "anclab/bits.hpp"
#include "anclab/bounded_scheme.hpp"
#include "anclab/decomposition.hpp"
#include "anclab/forest.hpp"

namespace anclab {

/// Spine-depth bound used for the interval family of the folded forest.
inline constexpr std::uint64_t kFoldedDepth = 3;

struct OptimalLabeling {
  std::uint64_t n = 0;
  FoldedForest folded;
  IntervalAssignment intervals;   // intervals on T*
  std::vector<BitString> labels;  // slot 0 unused
};

/// Labels a forest with at most n nodes (0 means |F|) through the folding decomposition.
OptimalLabeling label_forest_optimal(const RootedForest& forest, std::uint64_t n = 0);

struct DecodedOptimal {
  bool heavy = false;
  Interval interval;
  Span own;
  Span apex;  // equals own for APEX nodes
};

/// Layout: [heavy flag][k' in ceil(log2(K+1)) bits][b'-1 in ceil(log2 B_max) bits]
/// [t in ceil(log2(B_max+1)) bits][interval, fixed-nd codec of (n, 3)].
/// APEX labels have flag 0 and zeroed apex fields.
class OptimalDecoder {
 public:
  explicit OptimalDecoder(std::uint64_t n);

  unsigned label_length() const { return length_; }
  const ParamTable& params() const { return codec_.params(); }

  DecodedOptimal decode(const BitString& label) const;
  BitString encode(const Interval& own, const Interval* apex) const;

  /// l1 belongs to v, l2 to u: is v an ancestor of u.
  bool is_ancestor(const BitString& l1, const BitString& l2) const;
  /// Consistent variant, anti-symmetric and transitive over all emitted labels.
  bool is_ancestor_consistent(const BitString& l1, const BitString& l2) const;

  static bool ancestor(const DecodedOptimal& v, const DecodedOptimal& u) {
    return contains(v.own, u.own) || (strictly_contains(v.apex, u.own) && precedes(v.own, u.own));
  }
  static bool consistent(const DecodedOptimal& v, const DecodedOptimal& u) {
    return (strictly_contains(v.own, u.own) && contains(v.own, u.apex)) ||
           (strictly_contains(v.apex, u.own) && precedes(v.own, u.own) && contains(v.apex, u.apex));
  }

 private:
  IntervalCodec codec_;
  unsigned level_bits_ = 0;
  unsigned b_bits_ = 0;
  unsigned t_bits_ = 0;
  unsigned length_ = 0;
};

}  // namespace anclab
