#include "ofdmim/lookup_table.hpp"

#include <stdexcept>

namespace ofdmim {

namespace {

// C(n, k) for n <= 64; the largest case C(64, 32) still fits in 64 bits.
// Multiplies through a 128-bit intermediate so partial products never wrap.
std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(acc);
}

int floor_log2(std::uint64_t x) {
  int p = -1;
  while (x != 0) {
    x >>= 1;
    ++p;
  }
  return p;
}

void validate_group_shape(int n_group, int k_active) {
  if (n_group < 1 || n_group > 64) {
    throw ConfigError("group size must be in [1, 64]");
  }
  if (k_active < 1 || k_active > n_group) {
    throw ConfigError("active count must be in [1, group size]");
  }
}

}  // namespace

int index_bit_count(int n_group, int k_active) {
  validate_group_shape(n_group, k_active);
  return floor_log2(binomial(n_group, k_active));
}

LookupTable::LookupTable(int n_group, int k_active)
    : n_group_(n_group), k_active_(k_active) {
  validate_group_shape(n_group, k_active);
  p1_ = floor_log2(binomial(n_group, k_active));

  // Materialize small tables; the detector scans every row per group, so a
  // flat array beats re-deriving combinations on the fly.
  constexpr std::uint64_t kMaterializeLimit = 65536;
  if (n_rows() <= kMaterializeLimit) {
    rows_.reserve(n_rows() * static_cast<std::uint64_t>(k_active_));
    Combination combo(static_cast<std::size_t>(k_active_));
    for (int i = 0; i < k_active_; ++i) combo[static_cast<std::size_t>(i)] = i + 1;
    for (std::uint64_t v = 0; v < n_rows(); ++v) {
      for (int idx : combo) rows_.push_back(static_cast<std::uint8_t>(idx));
      // Advance to the next combination in lexicographic order.
      int i = k_active_ - 1;
      while (i >= 0 && combo[static_cast<std::size_t>(i)] == n_group_ - k_active_ + i + 1) --i;
      if (i < 0) break;  // past the last combination (only on the final row)
      ++combo[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k_active_; ++j) {
        combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
}

Combination LookupTable::row(std::uint64_t v) const {
  if (v >= n_rows()) throw std::invalid_argument("lookup row out of range");
  Combination combo(static_cast<std::size_t>(k_active_));
  if (!rows_.empty()) {
    const std::uint8_t* r = rows_.data() + v * static_cast<std::uint64_t>(k_active_);
    for (int i = 0; i < k_active_; ++i) combo[static_cast<std::size_t>(i)] = r[i];
    return combo;
  }
  // Combinadic unranking: pick each index as the smallest value whose
  // remaining-combination count does not exhaust v.
  std::uint64_t remaining = v;
  int next = 1;
  for (int i = 0; i < k_active_; ++i) {
    for (int c = next;; ++c) {
      std::uint64_t block = binomial(n_group_ - c, k_active_ - i - 1);
      if (remaining < block) {
        combo[static_cast<std::size_t>(i)] = c;
        next = c + 1;
        break;
      }
      remaining -= block;
    }
  }
  return combo;
}

std::uint64_t LookupTable::rank(const Combination& combo) const {
  if (static_cast<int>(combo.size()) != k_active_) {
    throw std::invalid_argument("combination has wrong length");
  }
  std::uint64_t r = 0;
  int prev = 0;
  for (int i = 0; i < k_active_; ++i) {
    int c = combo[static_cast<std::size_t>(i)];
    if (c <= prev || c > n_group_) {
      throw std::invalid_argument("combination indices must be strictly increasing in [1, n]");
    }
    for (int j = prev + 1; j < c; ++j) {
      r += binomial(n_group_ - j, k_active_ - i - 1);
    }
    prev = c;
  }
  if (r >= n_rows()) {
    throw std::invalid_argument("combination not in truncated table");
  }
  return r;
}

Combination bits_to_indices(const BitVec& index_bits, const LookupTable& table) {
  check_arg(static_cast<int>(index_bits.size()) == table.index_bits(),
            "index bit count mismatch");
  std::uint64_t v = 0;
  for (std::uint8_t b : index_bits) {
    check_arg(b <= 1, "bits must be 0 or 1");
    v = (v << 1) | b;
  }
  return table.row(v);
}

BitVec indices_to_bits(const Combination& combo, const LookupTable& table) {
  std::uint64_t v = table.rank(combo);
  const int p1 = table.index_bits();
  BitVec bits(static_cast<std::size_t>(p1));
  for (int i = p1 - 1; i >= 0; --i) {
    bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v & 1u);
    v >>= 1;
  }
  return bits;
}

}  // namespace ofdmim
