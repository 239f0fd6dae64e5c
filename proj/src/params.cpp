#include "anclab/params.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace anclab {

namespace {

// k log2^2 k, the per-level denominator; equals 2 at k = 2.
long double level_weight(int k) {
  const long double lg = std::log2(static_cast<long double>(k));
  return k * lg * lg;
}

std::int64_t checked_ceil(long double v) {
  const long double r = std::ceil(v);
  if (!(r < 0x1p62L)) throw std::invalid_argument("parameter overflow: (n, d) outside the supported range");
  return static_cast<std::int64_t>(r);
}

}  // namespace

int ceil_log2(std::uint64_t v) { return v <= 1 ? 0 : 64 - std::countl_zero(v - 1); }

double ParamTable::gamma() {
  static const double value = [] {
    constexpr int kTerms = 1 << 20;
    long double sum = 0;
    for (int j = kTerms; j >= 2; --j) sum += 1.0L / level_weight(j);
    const long double ln2 = std::log(2.0L);
    const long double tail = ln2 * ln2 / std::log(static_cast<long double>(kTerms));
    // Round the bound up past the long double accumulation error.
    return static_cast<double>(1.0L + sum + tail) + 1e-12;
  }();
  return value;
}

int ParamTable::min_level(std::uint64_t size) { return std::max(1, ceil_log2(size)); }

ParamTable::ParamTable(std::uint64_t n, std::uint64_t d) : n_(n), d_(d) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("ParamTable: n must be in [1, 2^31]");
  if (d < 1 || d > kMaxD) throw std::invalid_argument("ParamTable: d must be in [1, 2^28]");
  max_level_ = min_level(n);
  N_ = checked_ceil(gamma() * static_cast<long double>(n));

  const int K = max_level_;
  x_.assign(K + 1, 0);
  A_.assign(K + 1, 0);
  B_.assign(K + 1, 0);
  c_.assign(K + 1, 0.0);
  x_[1] = 1;
  c_[1] = 1.0;
  A_[1] = N_;
  B_[1] = 2;
  const long double spread = static_cast<long double>(d) + 1;
  for (int k = 2; k <= K; ++k) {
    const long double w = level_weight(k);
    const long double half_span = std::ldexp(1.0L, k - 1);
    x_[k] = checked_ceil(half_span / (spread * w));
    c_[k] = static_cast<double>(c_[k - 1] + 1.0L / w);
    A_[k] = 1 + checked_ceil(static_cast<long double>(N_) * spread * w / half_span);
    B_[k] = checked_ceil(2.0L * c_[k] * spread * w);
  }
  for (int k = 1; k <= K; ++k) max_B_ = std::max(max_B_, B_[k]);
}

std::int64_t ParamTable::floor_c_times(int k, std::uint64_t m) const {
  // c = mantissa * 2^exponent exactly; c >= 1 so exponent > -53.
  int exponent = 0;
  const double fraction = std::frexp(c_[k], &exponent);
  const auto mantissa = static_cast<std::uint64_t>(std::ldexp(fraction, 53));
  const int shift = 53 - exponent;
  const unsigned __int128 product = static_cast<unsigned __int128>(mantissa) * m;
  return static_cast<std::int64_t>(product >> shift);
}

}  // namespace anclab
