#pragma once

#include <cstdint>
#include <random>

#include "ofdmim/common.hpp"

namespace ofdmim {

/// SplitMix64 finalizer; cheap, well-mixed 64-bit hash.
std::uint64_t mix64(std::uint64_t x);

/// Derives an independent stream seed from a master seed and two stream
/// coordinates (e.g. SNR-point index and trial index). Every Monte Carlo
/// work unit gets its own stream, so results do not depend on how trials
/// are distributed over threads.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

/// Deterministic random source. mt19937_64 core with hand-rolled output
/// conversions (uniform doubles, polar complex Gaussians) so a given seed
/// produces the same draw sequence on every platform and worker layout.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Single fair bit. Bits are consumed LSB-first from buffered words.
  int bit() {
    if (bits_left_ == 0) {
      bit_buffer_ = next_u64();
      bits_left_ = 64;
    }
    const int b = static_cast<int>(bit_buffer_ & 1u);
    bit_buffer_ >>= 1;
    --bits_left_;
    return b;
  }

  /// n random bits packed big-endian (first bit drawn = MSB).
  std::uint64_t bits_value(int n);

  void fill_bits(BitVec& out, std::size_t n);

  /// Circularly symmetric complex Gaussian CN(0, variance).
  cx cnormal(double variance);

  /// Uniform integer in [0, bound), rejection sampled.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  std::uint64_t bit_buffer_ = 0;
  int bits_left_ = 0;
};

}  // namespace ofdmim
