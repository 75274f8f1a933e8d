#pragma once

#include <armadillo>
#include <vector>

#include "ofdmim/common.hpp"
#include "ofdmim/lookup_table.hpp"

namespace ofdmim {

/// OFDM block geometry: n_total subcarriers split into n_total / n_group
/// groups, k_active of each group's subcarriers carrying symbols.
struct FrameDims {
  int n_total = 0;
  int n_cp = 0;
  int n_group = 0;
  int k_active = 0;

  int n_groups() const { return n_total / n_group; }
  void validate() const;
};

/// Scale applied to active subcarriers so a block radiates the same average
/// power as one with every subcarrier loaded: sqrt(n_group / k_active).
double power_scale(int n_group, int k_active);

/// Places symbols[i] on 1-based position active[i] of an n_group-long group,
/// zeros elsewhere.
std::vector<cx> assemble_group(const Combination& active,
                               const std::vector<cx>& symbols, int n_group);

/// Spreads each group across the whole band: block[g + m * G] = groups[g][m],
/// so one group's subcarriers sit G apart and see near-independent fading.
arma::cx_vec interleave_groups(const std::vector<std::vector<cx>>& groups);

/// Exact inverse of interleave_groups.
std::vector<std::vector<cx>> deinterleave_block(const arma::cx_vec& block,
                                                int n_group);

/// Unitary IFFT followed by a cyclic prefix of n_cp samples.
arma::cx_vec to_time_domain(const arma::cx_vec& freq, int n_cp);

/// Drops the n_cp-sample prefix and applies the unitary FFT.
arma::cx_vec to_freq_domain(const arma::cx_vec& time, int n_total, int n_cp);

}  // namespace ofdmim
