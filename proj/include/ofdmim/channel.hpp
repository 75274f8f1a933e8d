#pragma once

#include <armadillo>
#include <vector>

#include "ofdmim/common.hpp"
#include "ofdmim/rng.hpp"

namespace ofdmim {

/// One block-fading draw of an L-tap Rayleigh channel between n_tx transmit
/// and n_rx receive antennas. Taps are i.i.d. CN(0, 1/L), so every
/// per-subcarrier coefficient has unit variance.
struct ChannelRealization {
  arma::cx_cube taps;  // n_rx x n_tx x L
  arma::cx_cube freq;  // n_rx x n_tx x n_total

  int n_rx() const { return static_cast<int>(taps.n_rows); }
  int n_tx() const { return static_cast<int>(taps.n_cols); }
  int n_taps() const { return static_cast<int>(taps.n_slices); }
  int n_total() const { return static_cast<int>(freq.n_slices); }

  /// H_n for 0-based subcarrier n.
  arma::cx_mat at(int n) const { return freq.slice(static_cast<arma::uword>(n)); }
};

/// Unnormalized n_total-point DFT of the taps, one coefficient per subcarrier.
arma::cx_vec taps_to_freq(const arma::cx_vec& taps, int n_total);

/// Draws taps in a fixed (rx, tx, tap) order so realizations depend only on
/// the rng stream, then fills in the frequency response.
ChannelRealization draw_channel(Rng& rng, int n_taps, int n_rx, int n_tx,
                                int n_total);

/// Per-complex-sample noise power for a target SNR: rho = U * p_s / sigma^2
/// with unit per-stream symbol power, hence sigma^2 = U / rho.
double noise_variance(int n_users, double rho);

/// y_n = sum_u H_nu x_nu + w_n. streams[u] is n_tx x n_total; the result is
/// n_rx x n_total. Noise is skipped entirely when sigma2 == 0 so noiseless
/// runs consume no rng draws.
arma::cx_mat apply_uplink(const std::vector<ChannelRealization>& per_user,
                          const std::vector<arma::cx_mat>& streams,
                          double sigma2, Rng& rng);

/// One user's receive path: y_n = H_n x_n + w_n with x the precoded
/// broadcast block (n_tx x n_total); result is n_rx x n_total.
arma::cx_mat apply_downlink(const ChannelRealization& user_channel,
                            const arma::cx_mat& precoded, double sigma2,
                            Rng& rng);

/// Tapped-delay-line reference: linear convolution of x with the taps,
/// truncated to x's length (samples before the block are zero). Used to
/// validate the per-subcarrier frequency-domain model.
arma::cx_vec tdl_filter(const arma::cx_vec& x, const arma::cx_vec& taps);

}  // namespace ofdmim
