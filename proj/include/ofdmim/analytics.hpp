#pragma once

#include <armadillo>
#include <vector>

#include "ofdmim/common.hpp"

namespace ofdmim {

enum class Scheme { kOfdmIm, kOfdm, kSimOfdm };

const char* scheme_name(Scheme s);

/// Waveform parameters a scheme needs for its rate/PAPR formulas. The
/// index-modulation variant with group size tied to the constellation
/// (n_group = order, k_active = order - 1) is derived, not free.
struct SchemeParams {
  Scheme scheme = Scheme::kOfdmIm;
  int n_total = 0;
  int n_cp = 0;
  int n_group = 0;
  int k_active = 0;
  int order = 0;

  int n_groups() const { return n_total / n_group; }
  void validate() const;

  static SchemeParams ofdm_im(int n_total, int n_cp, int n_group, int k_active,
                              int order);
  static SchemeParams ofdm(int n_total, int n_cp, int order);
  static SchemeParams sim_ofdm(int n_total, int n_cp, int order);
};

/// Bits per time-frequency slot including cyclic-prefix overhead:
/// G * (floor(log2 C(N,K)) + K log2 M) / (n_total + n_cp) for grouped
/// schemes, n_total log2 M / (n_total + n_cp) for plain OFDM.
double spectral_efficiency(const SchemeParams& p);

/// Worst-case PAPR in dB: 10 log10(G K) when only G K subcarriers can be
/// loaded, 10 log10(n_total) when all of them can.
double papr_bound_db(const SchemeParams& p);

/// Empirical peak-to-average power of Nyquist-rate samples, in dB. Pass the
/// OFDM symbol body (cyclic prefix excluded; it only repeats samples).
double papr_db(const arma::cx_vec& time_body);

struct CcdfPoint {
  double threshold_db = 0.0;
  double prob = 0.0;  // Pr(PAPR > threshold)
};

/// Empirical exceedance curve over the given thresholds.
std::vector<CcdfPoint> papr_ccdf(const std::vector<double>& samples_db,
                                 const std::vector<double>& thresholds_db);

}  // namespace ofdmim
