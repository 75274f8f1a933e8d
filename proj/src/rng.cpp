#include "ofdmim/rng.hpp"

#include <cmath>
#include <numbers>

namespace ofdmim {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ mix64(a + 0x9E3779B97F4A7C15ULL));
  h = mix64(h ^ mix64(b + 0xD1B54A32D192ED03ULL));
  return h;
}

std::uint64_t Rng::bits_value(int n) {
  check_arg(n >= 0 && n <= 64, "bits_value: n out of range");
  std::uint64_t v = 0;
  for (int i = 0; i < n; ++i) v = (v << 1) | static_cast<std::uint64_t>(bit());
  return v;
}

void Rng::fill_bits(BitVec& out, std::size_t n) {
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(bit());
}

cx Rng::cnormal(double variance) {
  // Polar form: |z|^2 ~ Exp(mean variance), phase uniform. Real and
  // imaginary parts are each N(0, variance/2).
  const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
  const double u2 = uniform();
  const double r = std::sqrt(-variance * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phi), r * std::sin(phi)};
}

std::uint64_t Rng::below(std::uint64_t bound) {
  check_arg(bound > 0, "below: bound must be positive");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % bound;
}

}  // namespace ofdmim
