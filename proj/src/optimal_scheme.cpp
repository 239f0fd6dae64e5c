#include "anclab/optimal_scheme.hpp"

#include <string>

namespace anclab {

OptimalDecoder::OptimalDecoder(std::uint64_t n) : codec_(ParamTable(n, kFoldedDepth)) {
  const ParamTable& p = codec_.params();
  level_bits_ = static_cast<unsigned>(ceil_log2(static_cast<std::uint64_t>(p.max_level()) + 1));
  b_bits_ = static_cast<unsigned>(ceil_log2(p.max_B()));
  t_bits_ = static_cast<unsigned>(ceil_log2(p.max_B() + 1));
  length_ = 1 + level_bits_ + b_bits_ + t_bits_ + codec_.length();
  if (length_ > BitString::kMaxBits) throw std::invalid_argument("optimal labels exceed 128 bits");
}

BitString OptimalDecoder::encode(const Interval& own, const Interval* apex) const {
  BitString out;
  if (apex == nullptr) {
    out.append(0, 1);
    out.append_zeros(level_bits_ + b_bits_ + t_bits_);
  } else {
    const ParamTable& p = codec_.params();
    const Span own_span = interval_bounds(p, own);
    const Span apex_span = interval_bounds(p, *apex);
    if (!strictly_contains(apex_span, own_span)) throw AssignmentError("heavy interval not inside its apex interval");
    const std::int64_t a2 = own_span.lo / p.x(apex->level);
    const std::int64_t t = a2 - apex->a;
    if (t < 0 || t > p.B(apex->level)) throw AssignmentError("apex offset out of range");
    out.append(1, 1);
    out.append(static_cast<std::uint64_t>(apex->level), level_bits_);
    out.append(static_cast<std::uint64_t>(apex->b - 1), b_bits_);
    out.append(static_cast<std::uint64_t>(t), t_bits_);
  }
  codec_.append(out, own, codec_.length());
  return out;
}

DecodedOptimal OptimalDecoder::decode(const BitString& label) const {
  if (label.size() != length_) throw LabelError("label length does not match n");
  const ParamTable& p = codec_.params();
  const unsigned header = 1 + level_bits_ + b_bits_ + t_bits_;
  DecodedOptimal out;
  out.interval = codec_.read(label, header, codec_.length());
  out.own = interval_bounds(p, out.interval);
  out.heavy = label.bit(0);
  if (!out.heavy) {
    if (label.zeros_from(1) < header - 1) throw LabelError("apex label with nonzero apex fields");
    out.apex = out.own;
    return out;
  }
  const auto k2 = static_cast<int>(label.read(1, level_bits_));
  if (k2 < 1 || k2 > p.max_level()) throw LabelError("apex level out of range");
  const auto b2 = static_cast<std::int64_t>(label.read(1 + level_bits_, b_bits_)) + 1;
  const auto t = static_cast<std::int64_t>(label.read(1 + level_bits_ + b_bits_, t_bits_));
  if (b2 > p.B(k2) || t > p.B(k2)) throw LabelError("apex field out of range");
  const std::int64_t x = p.x(k2);
  const std::int64_t a2 = out.own.lo / x - t;
  if (a2 < 1 || a2 > p.A(k2)) throw LabelError("apex position out of range");
  out.apex = Span{x * a2, x * (a2 + b2)};
  if (!strictly_contains(out.apex, out.own)) throw LabelError("apex interval does not contain the node interval");
  return out;
}

bool OptimalDecoder::is_ancestor(const BitString& l1, const BitString& l2) const {
  return ancestor(decode(l1), decode(l2));
}

bool OptimalDecoder::is_ancestor_consistent(const BitString& l1, const BitString& l2) const {
  if (l1 == l2) {
    decode(l1);
    return true;
  }
  return consistent(decode(l1), decode(l2));
}

OptimalLabeling label_forest_optimal(const RootedForest& forest, std::uint64_t n) {
  const std::uint64_t size = forest.size();
  if (n == 0) n = size;
  if (size > n) throw std::invalid_argument("forest has more than n nodes");
  OptimalLabeling out{n, fold(forest), {}, {}};
  const OptimalDecoder codec(n);
  const LayoutForest layout(out.folded.folded, out.folded.dfs_num);
  const FoldedSpine spines(out.folded);
  out.intervals = assign_intervals(layout, codec.params(), spines);
  out.labels.resize(size + 1);
  for (NodeId v = 1; v <= size; ++v) {
    const Interval& own = out.intervals[v];
    if (out.folded.is_apex(v)) {
      out.labels[v] = codec.encode(own, nullptr);
    } else {
      out.labels[v] = codec.encode(own, &out.intervals[out.folded.apex_of[v]]);
    }
  }
  return out;
}

}  // namespace anclab
