#pragma once

#include <cstdint>
#include <vector>

namespace anclab {

/// Per-level constants of the interval family for forests with at most n nodes and
/// spine-decomposition depth at most d. Levels run 1..max_level() with
/// max_level() = max(1, ceil(log2 n)).
///
///   x_1 = 1,  x_k = ceil(2^(k-1) / ((d+1) k log2^2 k))
///   c_1 = 1,  c_k = 1 + sum_{j=2..k} 1 / (j log2^2 j)
///   A_1 = N,  A_k = 1 + ceil(N (d+1) k log2^2 k / 2^(k-1))
///   B_1 = 2,  B_k = ceil(2 c_k (d+1) k log2^2 k)
///   N = ceil(gamma n)
///
/// Immutable after construction.
class ParamTable {
 public:
  static constexpr std::uint64_t kMaxN = std::uint64_t{1} << 31;
  static constexpr std::uint64_t kMaxD = std::uint64_t{1} << 28;

  /// Throws std::invalid_argument unless 1 <= n <= kMaxN and 1 <= d <= kMaxD.
  ParamTable(std::uint64_t n, std::uint64_t d);

  std::uint64_t n() const { return n_; }
  std::uint64_t d() const { return d_; }
  int max_level() const { return max_level_; }
  std::int64_t N() const { return N_; }

  std::int64_t x(int k) const { return x_[k]; }
  double c(int k) const { return c_[k]; }
  std::int64_t A(int k) const { return A_[k]; }
  std::int64_t B(int k) const { return B_[k]; }
  std::int64_t max_B() const { return max_B_; }

  /// floor(c_k * m), evaluated exactly on the stored double c_k.
  std::int64_t floor_c_times(int k, std::uint64_t m) const;

  /// Smallest level able to host a tree of the given size: max(1, ceil(log2 size)).
  static int min_level(std::uint64_t size);

  /// Upper bound on 1 + sum_{j>=2} 1/(j log2^2 j): partial sum to 2^20 plus the
  /// integral tail ln^2 2 / ln 2^20.
  static double gamma();

 private:
  std::uint64_t n_;
  std::uint64_t d_;
  int max_level_;
  std::int64_t N_;
  std::int64_t max_B_ = 0;
  std::vector<std::int64_t> x_, A_, B_;
  std::vector<double> c_;
};

/// ceil(log2 v) for v >= 1.
int ceil_log2(std::uint64_t v);

}  // namespace anclab
