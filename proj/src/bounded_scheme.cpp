#include "anclab/bounded_scheme.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include "anclab/decomposition.hpp"

namespace anclab {

std::string_view to_string(FamilyMode mode) {
  switch (mode) {
    case FamilyMode::kFixedND: return "fixed-nd";
    case FamilyMode::kFixedN: return "fixed-n";
    case FamilyMode::kUniversal: return "universal";
  }
  return "?";
}

std::optional<FamilyMode> parse_family_mode(std::string_view name) {
  if (name == "fixed-nd") return FamilyMode::kFixedND;
  if (name == "fixed-n") return FamilyMode::kFixedN;
  if (name == "universal") return FamilyMode::kUniversal;
  return std::nullopt;
}

IntervalCodec::IntervalCodec(ParamTable params) : params_(std::move(params)) {
  const int K = params_.max_level();
  header_bits_.assign(K + 1, 0);
  b_bits_.assign(K + 1, 0);
  a_bits_.assign(K + 1, 0);
  for (int k = 1; k <= K; ++k) {
    header_bits_[k] = static_cast<unsigned>(ceil_log2(k));
    b_bits_[k] = static_cast<unsigned>(ceil_log2(params_.B(k)));
    a_bits_[k] = static_cast<unsigned>(ceil_log2(params_.A(k)));
    length_ = std::max(length_, 2 * header_bits_[k] + 1 + b_bits_[k] + a_bits_[k] + 1);
  }
}

void IntervalCodec::append(BitString& out, const Interval& interval, unsigned width) const {
  if (!in_range(params_, interval)) throw std::invalid_argument("interval outside the parameter ranges");
  const int k = interval.level;
  const unsigned h = header_bits_[k];
  const unsigned used = 2 * h + 1 + b_bits_[k] + a_bits_[k];
  if (width < used + 1) throw std::invalid_argument("label width too small for interval");
  out.append_zeros(h);
  out.append(1, 1);
  out.append(static_cast<std::uint64_t>(k - 1), h);
  out.append(static_cast<std::uint64_t>(interval.b - 1), b_bits_[k]);
  out.append(static_cast<std::uint64_t>(interval.a - 1), a_bits_[k]);
  out.append(1, 1);
  out.append_zeros(width - used - 1);
}

Interval IntervalCodec::read(const BitString& bits, unsigned pos, unsigned width) const {
  if (pos + width > bits.size()) throw LabelError("label too short");
  const unsigned h = bits.zeros_from(pos);
  if (h > 6 || 2 * h + 1 > width) throw LabelError("bad level header");
  const int k = static_cast<int>(bits.read(pos + h + 1, h)) + 1;
  if (k > params_.max_level() || header_bits_[k] != h) throw LabelError("bad level");
  const unsigned used = 2 * h + 1 + b_bits_[k] + a_bits_[k];
  if (used + 1 > width) throw LabelError("label too short for level");
  unsigned p = pos + 2 * h + 1;
  Interval out;
  out.level = k;
  out.b = static_cast<std::int64_t>(bits.read(p, b_bits_[k])) + 1;
  p += b_bits_[k];
  out.a = static_cast<std::int64_t>(bits.read(p, a_bits_[k])) + 1;
  p += a_bits_[k];
  if (out.b > params_.B(k) || out.a > params_.A(k)) throw LabelError("interval field out of range");
  if (!bits.bit(p)) throw LabelError("missing pad marker");
  const unsigned pad = pos + width - p - 1;
  if (pad > 0 && bits.zeros_from(p + 1) < pad) throw LabelError("nonzero padding");
  return out;
}

namespace {

constexpr unsigned kLogDSlots = BoundedFamily::kMaxLogD + 1;
constexpr unsigned kLogNSlots = BoundedFamily::kMaxLogN + 1;

std::array<std::int8_t, BitString::kMaxBits + 1> empty_index() {
  std::array<std::int8_t, BitString::kMaxBits + 1> index;
  index.fill(-1);
  return index;
}

}  // namespace

BoundedFamily::BoundedFamily(FamilyMode mode, std::uint64_t n, std::uint64_t d, bool depth_field)
    : mode_(mode), n_(n), d_(d), depth_field_(depth_field) {
  switch (mode_) {
    case FamilyMode::kFixedND: {
      codecs_.emplace_back(IntervalCodec(ParamTable(n, d)));
      widths_.push_back(codecs_[0]->length());
      break;
    }
    case FamilyMode::kFixedN: {
      (void)ParamTable(n, 1);  // validates n
      length_index_.push_back(empty_index());
      unsigned prev = 0;
      for (unsigned j = 0; j < kLogDSlots; ++j) {
        IntervalCodec codec(ParamTable(n, std::uint64_t{1} << j));
        const unsigned width = std::max(codec.length(), prev + 1);
        prev = width;
        codecs_.emplace_back(std::move(codec));
        widths_.push_back(width);
        const unsigned total = width + (depth_field_ ? j : 0);
        if (total <= BitString::kMaxBits) length_index_[0][total] = static_cast<std::int8_t>(j);
      }
      break;
    }
    case FamilyMode::kUniversal: {
      codecs_.resize(kLogDSlots * kLogNSlots);
      widths_.assign(kLogDSlots * kLogNSlots, 0);
      length_index_.assign(kLogDSlots, empty_index());
      for (unsigned j = 0; j < kLogDSlots; ++j) {
        unsigned prev = 0;
        for (unsigned i = 0; i < kLogNSlots; ++i) {
          IntervalCodec codec(ParamTable(std::uint64_t{1} << i, std::uint64_t{1} << j));
          const unsigned width = std::max(codec.length(), prev + 1);
          prev = width;
          codecs_[j * kLogNSlots + i].emplace(std::move(codec));
          widths_[j * kLogNSlots + i] = width;
          const unsigned total = kLogDBits + width + (depth_field_ ? j : 0);
          if (total <= BitString::kMaxBits) length_index_[j][total] = static_cast<std::int8_t>(i);
        }
      }
      break;
    }
  }
}

unsigned BoundedFamily::depth_bits(unsigned log_d, std::uint64_t d) const {
  if (!depth_field_) return 0;
  return mode_ == FamilyMode::kFixedND ? static_cast<unsigned>(ceil_log2(d)) : log_d;
}

BoundedFamily::Encoder BoundedFamily::encoder(std::uint64_t size, std::uint64_t d) const {
  if (size == 0) throw std::invalid_argument("empty forest");
  d = std::max<std::uint64_t>(d, 1);
  switch (mode_) {
    case FamilyMode::kFixedND: {
      if (size > n_) throw std::invalid_argument("forest has more than n nodes");
      if (d > d_) throw std::invalid_argument("forest exceeds the depth bound d");
      return Encoder{*codecs_[0], 0, 0, widths_[0], depth_bits(0, d_)};
    }
    case FamilyMode::kFixedN: {
      if (size > n_) throw std::invalid_argument("forest has more than n nodes");
      if (d > ParamTable::kMaxD) throw std::invalid_argument("depth bound exceeds 2^28");
      const auto j = static_cast<unsigned>(ceil_log2(d));
      if (widths_[j] + depth_bits(j, d) > BitString::kMaxBits) throw std::invalid_argument("label exceeds 128 bits");
      return Encoder{*codecs_[j], 0, j, widths_[j], depth_bits(j, d)};
    }
    case FamilyMode::kUniversal: {
      if (size > ParamTable::kMaxN) throw std::invalid_argument("forest exceeds 2^31 nodes");
      if (d > ParamTable::kMaxD) throw std::invalid_argument("depth bound exceeds 2^28");
      const auto i = static_cast<unsigned>(ceil_log2(size));
      const auto j = static_cast<unsigned>(ceil_log2(d));
      const std::size_t slot = j * kLogNSlots + i;
      if (kLogDBits + widths_[slot] + depth_bits(j, d) > BitString::kMaxBits) {
        throw std::invalid_argument("label exceeds 128 bits");
      }
      return Encoder{*codecs_[slot], kLogDBits, j, widths_[slot], depth_bits(j, d)};
    }
  }
  throw std::logic_error("unknown family mode");
}

BitString BoundedFamily::encode(const Encoder& enc, const Interval& interval, std::uint32_t depth) const {
  BitString out;
  out.append(enc.log_d, enc.prefix_bits);
  enc.codec.append(out, interval, enc.ancestry_width);
  if (depth_field_) {
    if (depth == 0) throw std::invalid_argument("depth starts at 1");
    out.append(depth - 1, enc.depth_bits);
  }
  return out;
}

BoundedFamily::Decoded BoundedFamily::decode(const BitString& label) const {
  const unsigned len = label.size();
  const IntervalCodec* codec = nullptr;
  unsigned pos = 0;
  unsigned width = 0;
  unsigned dbits = 0;
  switch (mode_) {
    case FamilyMode::kFixedND: {
      codec = &*codecs_[0];
      width = widths_[0];
      dbits = depth_bits(0, d_);
      if (len != width + dbits) throw LabelError("label length does not match the family");
      break;
    }
    case FamilyMode::kFixedN: {
      const int j = length_index_[0][len];
      if (j < 0) throw LabelError("label length does not match the family");
      codec = &*codecs_[j];
      width = widths_[j];
      dbits = depth_bits(j, 0);
      break;
    }
    case FamilyMode::kUniversal: {
      if (len < kLogDBits) throw LabelError("label too short");
      const auto j = static_cast<unsigned>(label.read(0, kLogDBits));
      if (j >= kLogDSlots) throw LabelError("depth exponent out of range");
      const int i = length_index_[j][len];
      if (i < 0) throw LabelError("label length does not match the family");
      const std::size_t slot = j * kLogNSlots + static_cast<unsigned>(i);
      codec = &*codecs_[slot];
      pos = kLogDBits;
      width = widths_[slot];
      dbits = depth_bits(j, 0);
      break;
    }
  }
  Decoded out;
  out.interval = codec->read(label, pos, width);
  out.span = interval_bounds(codec->params(), out.interval);
  out.depth = depth_field_ ? static_cast<std::uint32_t>(label.read(pos + width, dbits)) + 1 : 0;
  return out;
}

const BoundedFamily& shared_family(FamilyMode mode, std::uint64_t n, std::uint64_t d, bool depth_field) {
  if (mode == FamilyMode::kUniversal) n = d = 0;
  if (mode == FamilyMode::kFixedN) d = 0;
  using Key = std::tuple<FamilyMode, std::uint64_t, std::uint64_t, bool>;
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<BoundedFamily>> cache;
  const Key key{mode, n, d, depth_field};
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<BoundedFamily>(mode, n, d, depth_field)).first;
  return *it->second;
}

bool BoundedDecoder::is_parent(const BitString& l1, const BitString& l2) const {
  if (!family_->has_depth_field()) throw std::logic_error("parent queries need parenthood labels");
  const auto u = family_->decode(l1);
  const auto v = family_->decode(l2);
  return v.depth == u.depth + 1 && contains(u.span, v.span);
}

namespace {

BoundedLabeling label_with_family(const RootedForest& forest, FamilyMode mode, std::uint64_t n, std::uint64_t d,
                                  std::uint64_t forest_d, const TreeStats& stats, bool parenthood) {
  const std::uint64_t size = forest.size();
  if (n == 0) n = size;
  if (mode == FamilyMode::kFixedND && d == 0) d = forest_d;
  const BoundedFamily& family = shared_family(mode, n, d, parenthood);
  const auto enc = family.encoder(size, forest_d);

  BoundedLabeling out;
  out.mode = mode;
  out.n = mode == FamilyMode::kUniversal ? 0 : n;
  out.d = mode == FamilyMode::kFixedND ? d : std::uint64_t{1} << enc.log_d;

  const LayoutForest layout(forest);
  out.intervals = assign_intervals(layout, enc.codec.params(), WeightSpine{});
  out.labels.resize(size + 1);
  for (NodeId v = 1; v <= size; ++v) {
    out.labels[v] = family.encode(enc, out.intervals[v], parenthood ? stats.depth[v] : 0);
  }
  return out;
}

}  // namespace

BoundedLabeling label_forest_bounded(const RootedForest& forest, FamilyMode mode, std::uint64_t n, std::uint64_t d) {
  const TreeStats stats = compute_stats(forest);
  const SpineDecomposition spines(forest, stats);
  return label_with_family(forest, mode, n, d, spines.depth(), stats, false);
}

BoundedLabeling label_forest_parenthood(const RootedForest& forest, FamilyMode mode, std::uint64_t n, std::uint64_t d) {
  const TreeStats stats = compute_stats(forest);
  return label_with_family(forest, mode, n, d, stats.forest_depth, stats, true);
}

}  // namespace anclab
