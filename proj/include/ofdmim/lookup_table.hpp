#pragma once

#include <cstdint>
#include <vector>

#include "ofdmim/common.hpp"

namespace ofdmim {

/// Strictly increasing 1-based subcarrier indices, K per group.
using Combination = std::vector<int>;

/// Per-group bit budget: p1 bits pick the active-index combination, the
/// remaining K*log2(M) bits modulate the symbols carried on it.
struct GroupBits {
  BitVec index_bits;
  BitVec symbol_bits;
};

/// floor(log2 C(n, k)) — the number of index bits a group of n subcarriers
/// with k active can carry. Throws ConfigError for invalid (n, k).
int index_bit_count(int n_group, int k_active);

/// Truncated table of active-index combinations: the first 2^p1
/// K-combinations of {1..N} in lexicographic order. Rows are materialized
/// for small tables; above 65536 rows, combinadic ranking/unranking serves
/// the same interface without storing anything.
///
/// Immutable after construction; safe for concurrent reads.
class LookupTable {
 public:
  LookupTable(int n_group, int k_active);

  int n_group() const { return n_group_; }
  int k_active() const { return k_active_; }
  int index_bits() const { return p1_; }
  std::uint64_t n_rows() const { return std::uint64_t{1} << p1_; }

  /// Row v (0-based) in lexicographic order.
  Combination row(std::uint64_t v) const;

  /// Lexicographic rank, the exact inverse of row(). Throws if the
  /// combination is not one of the 2^p1 retained rows — the detector can
  /// only emit table rows, so hitting this means an internal error.
  std::uint64_t rank(const Combination& combo) const;

  /// Flat row storage (n_rows x K) when materialized, nullptr otherwise.
  /// Entries are 1-based indices. Used by the detector's metric scan.
  const std::uint8_t* rows_data() const {
    return rows_.empty() ? nullptr : rows_.data();
  }

 private:
  int n_group_;
  int k_active_;
  int p1_;
  std::vector<std::uint8_t> rows_;  // flattened rows for small tables
};

inline LookupTable build_lookup(int n_group, int k_active) {
  return LookupTable(n_group, k_active);
}

/// Interprets index_bits as a big-endian integer v and returns table row v.
Combination bits_to_indices(const BitVec& index_bits, const LookupTable& table);

/// Exact inverse of bits_to_indices.
BitVec indices_to_bits(const Combination& combo, const LookupTable& table);

}  // namespace ofdmim
