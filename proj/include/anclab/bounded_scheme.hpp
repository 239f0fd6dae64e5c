#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "anclab/assignment.hpp"
#include "anclab/bits.hpp"
#include "anclab/forest.hpp"
#include "anclab/interval.hpp"
#include "anclab/params.hpp"

namespace anclab {

class LabelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What the decoder knows about the labeled forest.
///   kFixedND   n and d are known.
///   kFixedN    n is known; d-hat = 2^ceil(log2 d) is recovered from the label length.
///   kUniversal nothing is known; log2 d-hat sits in a 6-bit prefix and n-hat = 2^ceil(log2 n)
///              is recovered from the length.
enum class FamilyMode { kFixedND, kFixedN, kUniversal };

std::string_view to_string(FamilyMode mode);
std::optional<FamilyMode> parse_family_mode(std::string_view name);

/// Bit layout of one interval for a fixed parameter table:
///   ceil(log2 k) zeros, a 1, k-1 in ceil(log2 k) bits,
///   b-1 in ceil(log2 B_k) bits, a-1 in ceil(log2 A_k) bits,
///   then a 1 followed by zeros up to the requested width.
class IntervalCodec {
 public:
  explicit IntervalCodec(ParamTable params);

  const ParamTable& params() const { return params_; }
  /// Shortest width that fits every level, including the pad marker.
  unsigned length() const { return length_; }

  void append(BitString& out, const Interval& interval, unsigned width) const;
  /// Reads `width` bits at pos. Throws LabelError on malformed input.
  Interval read(const BitString& bits, unsigned pos, unsigned width) const;

 private:
  ParamTable params_;
  std::vector<unsigned> header_bits_, b_bits_, a_bits_;
  unsigned length_ = 0;
};

/// Label widths for one (mode, n, d) family. `depth_field` adds the parenthood depth
/// field after the ancestry part.
class BoundedFamily {
 public:
  static constexpr unsigned kMaxLogD = 28;
  static constexpr unsigned kMaxLogN = 31;
  static constexpr unsigned kLogDBits = 6;

  /// n is ignored in kUniversal mode and d is ignored outside kFixedND.
  BoundedFamily(FamilyMode mode, std::uint64_t n, std::uint64_t d, bool depth_field);

  FamilyMode mode() const { return mode_; }
  bool has_depth_field() const { return depth_field_; }

  struct Encoder {
    IntervalCodec codec;
    unsigned prefix_bits;     // 6-bit log2 d-hat in universal mode
    std::uint64_t log_d;      // value of that prefix
    unsigned ancestry_width;  // interval part, padded
    unsigned depth_bits;
  };
  /// Encoder for a concrete forest: size is the node count, d the spine-decomposition
  /// depth (or forest depth for parenthood). Throws std::invalid_argument when the
  /// forest does not fit the family.
  Encoder encoder(std::uint64_t size, std::uint64_t d) const;

  struct Decoded {
    Interval interval;
    Span span;
    std::uint32_t depth;  // 0 without a depth field
  };
  /// Constant-time decode. Throws LabelError for malformed labels.
  Decoded decode(const BitString& label) const;

  BitString encode(const Encoder& enc, const Interval& interval, std::uint32_t depth = 0) const;

 private:
  const IntervalCodec& codec_for(unsigned log_n, unsigned log_d) const;
  unsigned depth_bits(unsigned log_d, std::uint64_t d) const;

  FamilyMode mode_;
  std::uint64_t n_;
  std::uint64_t d_;
  bool depth_field_;
  // kFixedND: one codec. kFixedN: codec per log d-hat. kUniversal: per (log n-hat, log d-hat).
  std::vector<std::optional<IntervalCodec>> codecs_;
  std::vector<unsigned> widths_;  // padded ancestry width, same indexing as codecs_
  // Total label length -> log d-hat (kFixedN), or per log d-hat: length -> log n-hat.
  std::vector<std::array<std::int8_t, BitString::kMaxBits + 1>> length_index_;
};

/// Process-wide cache of families; construction of the universal tables is not free.
const BoundedFamily& shared_family(FamilyMode mode, std::uint64_t n, std::uint64_t d, bool depth_field);

struct BoundedLabeling {
  FamilyMode mode;
  std::uint64_t n = 0;  // as told to the decoder
  std::uint64_t d = 0;  // FixedND: as told; otherwise d-hat used by the marker
  IntervalAssignment intervals;
  std::vector<BitString> labels;  // slot 0 unused
};

/// Ancestry labels for forests of bounded spine-decomposition depth.
/// kFixedND requires n >= |F| and d >= spine depth; kFixedN takes n (0 means |F|).
BoundedLabeling label_forest_bounded(const RootedForest& forest, FamilyMode mode, std::uint64_t n = 0,
                                     std::uint64_t d = 0);

/// Parenthood labels: the ancestry label for depth-bounded forests plus the node depth.
/// Here d bounds the forest depth.
BoundedLabeling label_forest_parenthood(const RootedForest& forest, FamilyMode mode, std::uint64_t n = 0,
                                        std::uint64_t d = 0);

class BoundedDecoder {
 public:
  BoundedDecoder(FamilyMode mode, std::uint64_t n = 0, std::uint64_t d = 0, bool parenthood = false)
      : family_(&shared_family(mode, n, d, parenthood)) {}

  BoundedFamily::Decoded decode(const BitString& label) const { return family_->decode(label); }
  /// l1's node is an ancestor of l2's node.
  bool is_ancestor(const BitString& l1, const BitString& l2) const {
    return contains(family_->decode(l1).span, family_->decode(l2).span);
  }
  /// Requires a parenthood family.
  bool is_parent(const BitString& l1, const BitString& l2) const;

 private:
  const BoundedFamily* family_;
};

}  // namespace anclab
