#include "anclab/bits.hpp"

namespace anclab {

std::string BitString::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const unsigned digits = (size_ + 3) / 4;
  std::string out(digits, '0');
  u128 v = value_;
  for (unsigned i = digits; i-- > 0;) {
    out[i] = kDigits[static_cast<unsigned>(v & 0xF)];
    v >>= 4;
  }
  return out;
}

std::string BitString::to_binary() const {
  std::string out(size_, '0');
  for (unsigned i = 0; i < size_; ++i) {
    if (bit(i)) out[i] = '1';
  }
  return out;
}

BitString BitString::from_hex(std::string_view hex, unsigned bits) {
  if (bits > kMaxBits) throw std::invalid_argument("bit length exceeds 128");
  if (hex.size() != (bits + 3) / 4) throw std::invalid_argument("hex length does not match bit length");
  u128 v = 0;
  for (char ch : hex) {
    unsigned digit;
    if (ch >= '0' && ch <= '9') {
      digit = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      digit = static_cast<unsigned>(ch - 'a' + 10);
    } else if (ch >= 'A' && ch <= 'F') {
      digit = static_cast<unsigned>(ch - 'A' + 10);
    } else {
      throw std::invalid_argument("invalid hex digit");
    }
    v = (v << 4) | digit;
  }
  if (bits < 128 && (v >> bits) != 0) throw std::invalid_argument("hex value wider than bit length");
  BitString out;
  out.value_ = v;
  out.size_ = bits;
  return out;
}

}  // namespace anclab
