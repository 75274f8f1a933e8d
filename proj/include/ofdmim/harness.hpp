#pragma once

#include <armadillo>
#include <cstdint>
#include <vector>

#include "ofdmim/channel.hpp"
#include "ofdmim/config.hpp"
#include "ofdmim/frame.hpp"
#include "ofdmim/linkproc.hpp"
#include "ofdmim/lookup_table.hpp"
#include "ofdmim/modem.hpp"
#include "ofdmim/rng.hpp"

namespace ofdmim {

/// Integer error tallies for one or more trials. Symbol-bit errors are also
/// bucketed by whether the group's active-index decision was right, which
/// separates slicing noise from errors that cascade off a missed index set.
struct TrialCounts {
  long long trials = 0;
  long long total_bits = 0;
  long long index_bit_errors = 0;
  long long symbol_bit_errors = 0;
  long long symbol_bit_errors_after_miss = 0;
  long long groups = 0;
  long long groups_index_missed = 0;

  TrialCounts& operator+=(const TrialCounts& o);
  long long bit_errors() const { return index_bit_errors + symbol_bit_errors; }
};

/// One SNR point's accumulated result.
struct BerRecord {
  double snr_db = 0.0;
  TrialCounts counts;
  double ber = 0.0;
  double wall_time_s = 0.0;
};

struct SweepResult {
  LinkConfig config;  // normalized form actually simulated
  std::vector<BerRecord> records;
  double wall_time_s = 0.0;
};

/// End-to-end Monte Carlo engine for one link configuration.
///
/// Every trial draws from its own generator seeded by (master seed, SNR-point
/// index, trial index), and the trial schedule at a point depends only on
/// integer tallies, so results are identical for any worker count and any
/// execution order.
class Simulator {
 public:
  explicit Simulator(const LinkConfig& cfg);

  const LinkConfig& config() const { return cfg_; }

  /// One block: bits -> mapping -> channel -> MMSE -> detection -> tallies.
  TrialCounts run_trial(double rho, Rng& rng) const;

  /// Plain single-threaded loop; the reference the parallel path must match.
  BerRecord run_point_serial(int point_idx) const;

  /// Worker-parallel variant; workers == 1 falls through to the serial loop.
  BerRecord run_point(int point_idx, int workers) const;

 private:
  struct StreamTx {
    std::vector<std::uint64_t> index_vals;  // lookup row per group
    std::vector<std::uint32_t> labels;      // k_active symbol labels per group
  };

  StreamTx draw_stream(Rng& rng, arma::cx_vec& block) const;
  void detect_streams(const arma::cx_mat& estimates,
                      const std::vector<StreamTx>& tx, TrialCounts& c) const;
  TrialCounts run_uplink_trial(double rho, Rng& rng) const;
  TrialCounts run_downlink_trial(double rho, Rng& rng) const;

  template <typename RunRound>
  BerRecord run_point_impl(int point_idx, RunRound&& run_round) const;

  LinkConfig cfg_;
  LookupTable table_;
  Constellation constellation_;
  DetectorMetric metric_;
  double scale_;    // active-subcarrier amplitude boost
  int group_bits_;  // index bits + symbol bits per group
};

/// Runs every SNR point of the sweep with cfg.workers workers.
SweepResult run_sweep(const LinkConfig& cfg);

/// Per-block PAPR samples (dB) of randomly loaded blocks, deterministic in
/// (seed, block index) regardless of worker count.
std::vector<double> sample_papr(const SchemeParams& params, long long n_blocks,
                                std::uint64_t seed, int workers);

}  // namespace ofdmim
