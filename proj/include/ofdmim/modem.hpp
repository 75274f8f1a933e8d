#pragma once

#include <cstdint>
#include <vector>

#include "ofdmim/common.hpp"

namespace ofdmim {

/// Gray-labelled constellation with unit average symbol energy.
/// Supported orders: 2 (BPSK) and square QAM 4/16/64/256.
///
/// A label is the symbol's bit pattern read big-endian (first bit = MSB).
/// For square QAM the high half of the bits Gray-codes the I level and the
/// low half the Q level, so any two horizontally or vertically adjacent
/// points differ in exactly one bit.
class Constellation {
 public:
  explicit Constellation(int order);

  int order() const { return order_; }
  int bits_per_symbol() const { return bits_per_symbol_; }
  const std::vector<cx>& points() const { return points_; }

  cx map(std::uint32_t label) const { return points_[label]; }

  /// Nearest constellation point by Euclidean distance; ties resolve to the
  /// lowest label.
  std::uint32_t slice(cx v) const;

 private:
  int order_;
  int bits_per_symbol_;
  std::vector<cx> points_;
};

inline Constellation make_constellation(int order) { return Constellation(order); }

std::uint32_t bits_to_label(const std::uint8_t* bits, int count);
void label_to_bits(std::uint32_t label, std::uint8_t* bits, int count);

/// bits.size() must be a multiple of bits_per_symbol.
std::vector<cx> modulate(const BitVec& bits, const Constellation& c);

/// Hard-decision demap of each symbol back to its bit pattern.
BitVec demodulate(const std::vector<cx>& symbols, const Constellation& c);

}  // namespace ofdmim
