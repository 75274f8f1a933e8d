#pragma once

#include <armadillo>
#include <cstdint>
#include <vector>

#include "ofdmim/common.hpp"
#include "ofdmim/lookup_table.hpp"
#include "ofdmim/modem.hpp"

namespace ofdmim {

/// Index-decision score: sum over a candidate row of |x| (default) or |x|^2.
/// Plain magnitude is the tested contract; the squared variant exists for
/// experimentation only.
enum class DetectorMetric { kMagnitude, kMagnitudeSquared };

/// W = (H^H H + I/rho)^{-1} H^H via a Hermitian positive-definite solve; the
/// I/rho term keeps the system well conditioned for any finite rho. H is
/// rx x tx, W is tx x rx. The same expression precodes the downlink, where
/// the roles of the dimensions swap.
arma::cx_mat mmse_filter(const arma::cx_mat& h, double rho);

/// Downlink transmit normalization: gamma = sqrt(n_users / trace(P P^H)),
/// which pins the precoded transmit power to n_users.
double precoder_gain(const arma::cx_mat& p, int n_users);

struct GroupDecision {
  std::uint64_t row = 0;                // winning lookup-table row
  Combination indices;                  // its active positions (1-based)
  std::vector<std::uint32_t> labels;    // hard symbol decisions on those positions
};

/// Two-stage group detection: score every table row by the chosen metric over
/// the equalized group, take the best-scoring row (lowest row wins ties),
/// then slice the symbols sitting on that row's positions.
GroupDecision detect_group(const std::vector<cx>& equalized, const LookupTable& table,
                           const Constellation& c,
                           DetectorMetric metric = DetectorMetric::kMagnitude);

}  // namespace ofdmim
