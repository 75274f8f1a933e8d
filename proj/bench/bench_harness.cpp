/**
 * @file bench_harness.cpp
 * @brief Times the serial reference Monte Carlo loop against the OpenMP
 *        path and checks they produce identical tallies.
 */

#include <omp.h>

#include <chrono>
#include <cstdio>

#include <CLI11.hpp>

#include "ofdmim/harness.hpp"

namespace {

double time_s(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_counts(const ofdmim::TrialCounts& a, const ofdmim::TrialCounts& b) {
  return a.trials == b.trials && a.total_bits == b.total_bits &&
         a.index_bit_errors == b.index_bit_errors &&
         a.symbol_bit_errors == b.symbol_bit_errors &&
         a.symbol_bit_errors_after_miss == b.symbol_bit_errors_after_miss &&
         a.groups == b.groups && a.groups_index_missed == b.groups_index_missed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP harness benchmark"};
  int workers = omp_get_max_threads();
  long long trials = 2000;
  long long papr_blocks = 20000;
  app.add_option("--workers", workers, "Parallel worker count")->capture_default_str();
  app.add_option("--trials", trials, "Monte Carlo blocks per timed run")
      ->capture_default_str();
  app.add_option("--papr-blocks", papr_blocks, "Blocks for the PAPR benchmark")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  ofdmim::LinkConfig cfg;
  cfg.snr_points_db = {20.0};
  cfg.min_trials = trials;
  cfg.max_trials = trials;
  cfg.min_bit_errors = 0;
  cfg.seed = 7;

  const ofdmim::Simulator sim(cfg);
  ofdmim::BerRecord serial_rec, parallel_rec;
  const double t_serial = time_s([&] { serial_rec = sim.run_point_serial(0); });
  const double t_parallel = time_s([&] { parallel_rec = sim.run_point(0, workers); });

  const ofdmim::SchemeParams papr_params = cfg.scheme_params();
  std::vector<double> papr_serial, papr_parallel;
  const double t_papr_serial =
      time_s([&] { papr_serial = ofdmim::sample_papr(papr_params, papr_blocks, 7, 1); });
  const double t_papr_parallel = time_s(
      [&] { papr_parallel = ofdmim::sample_papr(papr_params, papr_blocks, 7, workers); });

  std::printf("workers: %d\n", workers);
  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial[s]", "omp[s]", "speedup");
  std::printf("%-28s %10.3f %10.3f %7.2fx\n", "ber point (2 users, 20 dB)", t_serial,
              t_parallel, t_serial / t_parallel);
  std::printf("%-28s %10.3f %10.3f %7.2fx\n", "papr sampling", t_papr_serial,
              t_papr_parallel, t_papr_serial / t_papr_parallel);

  const bool counts_ok = same_counts(serial_rec.counts, parallel_rec.counts);
  const bool papr_ok = papr_serial == papr_parallel;
  std::printf("tallies identical: %s\n", counts_ok ? "yes" : "NO");
  std::printf("papr samples identical: %s\n", papr_ok ? "yes" : "NO");
  return counts_ok && papr_ok ? 0 : 1;
}
