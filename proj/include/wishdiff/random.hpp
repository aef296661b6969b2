#pragma once

// Counter-based random streams. A stream is identified by (seed, stream
// index); distinct indices use disjoint counter ranges, so streams never
// overlap and any partition of work over threads draws the same numbers.

#include <array>
#include <cstdint>
#include <limits>

namespace wishdiff::mc {

// Philox4x32-10 block function.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

class RandomStream {
 public:
  using result_type = std::uint32_t;

  RandomStream(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  // Uniform on the open interval (0, 1) with 53 random bits.
  double uniform();
  // Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal();

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
  double spare_ = 0;
  bool has_spare_ = false;
};

}  // namespace wishdiff::mc
