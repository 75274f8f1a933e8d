#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ofdmim/analytics.hpp"
#include "ofdmim/harness.hpp"

namespace ofdmim {

/// CSV with the fixed column set
/// scheme,direction,snr_db,trials,total_bits,index_bit_errors,
/// symbol_bit_errors,ber,seed — one row per SNR point. Deterministic bytes
/// for a given (config, seed).
std::string sweep_to_csv(const SweepResult& result);

/// JSON mirror of the CSV plus a metadata header (config echo, config hash,
/// version, wall time) and the per-record error decomposition.
std::string sweep_to_json(const SweepResult& result);

struct PaprReport {
  SchemeParams params;
  long long n_blocks = 0;
  std::uint64_t seed = 0;
  double bound_db = 0.0;
  double max_sample_db = 0.0;
  std::vector<CcdfPoint> ccdf;
};

std::string papr_to_csv(const PaprReport& report);
std::string papr_to_json(const PaprReport& report);

struct SeRow {
  SchemeParams params;
  double se = 0.0;  // bits per time-frequency slot
};

std::string se_to_csv(const std::vector<SeRow>& rows);
std::string se_to_json(const std::vector<SeRow>& rows);

}  // namespace ofdmim
