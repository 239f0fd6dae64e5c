#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace anclab {

using u128 = unsigned __int128;

/// Bit string of up to 128 bits. Bit 0 is the first bit written; the string reads
/// as a big-endian integer of size() bits.
class BitString {
 public:
  static constexpr unsigned kMaxBits = 128;

  BitString() = default;

  unsigned size() const { return size_; }
  u128 value() const { return value_; }

  /// Appends the low `width` bits of field, most significant first.
  void append(std::uint64_t field, unsigned width) {
    if (width == 0) return;
    if (size_ + width > kMaxBits) throw std::length_error("label exceeds 128 bits");
    if (width < 64 && (field >> width) != 0) throw std::invalid_argument("field does not fit its width");
    value_ = (value_ << width) | field;
    size_ += width;
  }
  void append_zeros(unsigned width) {
    if (size_ + width > kMaxBits) throw std::length_error("label exceeds 128 bits");
    if (width >= 128) {
      value_ = 0;
    } else {
      value_ <<= width;
    }
    size_ += width;
  }

  /// Field of `width` (<= 64) bits starting at bit position pos.
  std::uint64_t read(unsigned pos, unsigned width) const {
    if (width == 0) return 0;
    const u128 shifted = value_ >> (size_ - pos - width);
    return static_cast<std::uint64_t>(width == 64 ? shifted : shifted & ((u128{1} << width) - 1));
  }
  bool bit(unsigned pos) const { return read(pos, 1) != 0; }

  /// Number of 0 bits from pos up to the first 1 (or to the end).
  unsigned zeros_from(unsigned pos) const {
    const unsigned rest = size_ - pos;
    if (rest == 0) return 0;
    const u128 tail = rest == 128 ? value_ : value_ & ((u128{1} << rest) - 1);
    const auto hi = static_cast<std::uint64_t>(tail >> 64);
    const auto lo = static_cast<std::uint64_t>(tail);
    const unsigned lead = hi ? std::countl_zero(hi) : 64 + std::countl_zero(lo);  // over 128 bits
    const unsigned z = lead - (128 - rest);
    return z > rest ? rest : z;
  }

  void flip(unsigned pos) { value_ ^= u128{1} << (size_ - 1 - pos); }

  /// Hex digits of the big-endian value, ceil(size/4) digits.
  std::string to_hex() const;
  std::string to_binary() const;
  /// Inverse of to_hex for a known bit length. Throws std::invalid_argument.
  static BitString from_hex(std::string_view hex, unsigned bits);

  bool operator==(const BitString&) const = default;

 private:
  u128 value_ = 0;
  unsigned size_ = 0;
};

}  // namespace anclab
