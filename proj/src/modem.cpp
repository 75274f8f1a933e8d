#include "ofdmim/modem.hpp"

#include <cmath>

namespace ofdmim {

namespace {

std::uint32_t gray_to_binary(std::uint32_t g) {
  for (int s = 1; s < 32; s <<= 1) g ^= g >> s;
  return g;
}

bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

}  // namespace

Constellation::Constellation(int order) : order_(order) {
  if (!is_power_of_two(order) || order < 2 || order > 256) {
    throw ConfigError("constellation order must be a power of two in [2, 256]");
  }
  bits_per_symbol_ = 0;
  for (int m = order; m > 1; m >>= 1) ++bits_per_symbol_;

  points_.resize(static_cast<std::size_t>(order));
  if (order == 2) {
    points_[0] = cx(1.0, 0.0);
    points_[1] = cx(-1.0, 0.0);
    return;
  }
  if (bits_per_symbol_ % 2 != 0) {
    throw ConfigError("constellation order must be 2 or a square QAM size");
  }

  const int half = bits_per_symbol_ / 2;
  const int side = 1 << half;
  // Levels +-1, +-3, ..., +-(side-1) scaled to unit average symbol energy.
  const double scale = 1.0 / std::sqrt(2.0 * (order - 1) / 3.0);
  for (std::uint32_t label = 0; label < static_cast<std::uint32_t>(order); ++label) {
    const std::uint32_t gi = label >> half;
    const std::uint32_t gq = label & ((1u << half) - 1u);
    const int pi = static_cast<int>(gray_to_binary(gi));
    const int pq = static_cast<int>(gray_to_binary(gq));
    points_[label] = cx((side - 1 - 2 * pi) * scale, (side - 1 - 2 * pq) * scale);
  }
}

std::uint32_t Constellation::slice(cx v) const {
  std::uint32_t best = 0;
  double best_d = std::norm(v - points_[0]);
  for (std::uint32_t label = 1; label < static_cast<std::uint32_t>(order_); ++label) {
    const double d = std::norm(v - points_[label]);
    if (d < best_d) {
      best_d = d;
      best = label;
    }
  }
  return best;
}

std::uint32_t bits_to_label(const std::uint8_t* bits, int count) {
  std::uint32_t label = 0;
  for (int i = 0; i < count; ++i) {
    check_arg(bits[i] <= 1, "bits must be 0 or 1");
    label = (label << 1) | bits[i];
  }
  return label;
}

void label_to_bits(std::uint32_t label, std::uint8_t* bits, int count) {
  for (int i = count - 1; i >= 0; --i) {
    bits[i] = static_cast<std::uint8_t>(label & 1u);
    label >>= 1;
  }
}

std::vector<cx> modulate(const BitVec& bits, const Constellation& c) {
  const int b = c.bits_per_symbol();
  check_arg(bits.size() % static_cast<std::size_t>(b) == 0,
            "bit count must be a multiple of bits per symbol");
  std::vector<cx> out(bits.size() / static_cast<std::size_t>(b));
  for (std::size_t s = 0; s < out.size(); ++s) {
    out[s] = c.map(bits_to_label(bits.data() + s * static_cast<std::size_t>(b), b));
  }
  return out;
}

BitVec demodulate(const std::vector<cx>& symbols, const Constellation& c) {
  const int b = c.bits_per_symbol();
  BitVec bits(symbols.size() * static_cast<std::size_t>(b));
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    label_to_bits(c.slice(symbols[s]), bits.data() + s * static_cast<std::size_t>(b), b);
  }
  return bits;
}

}  // namespace ofdmim
