#include <doctest.h>

#include <cmath>

#include "ofdmim/harness.hpp"
#include "test_util.hpp"

using namespace ofdmim;

namespace {

LinkConfig quick_uplink() {
  LinkConfig cfg;
  cfg.snr_points_db = {15.0};
  cfg.min_trials = 60;
  cfg.max_trials = 60;
  cfg.min_bit_errors = 0;
  cfg.seed = 99;
  return cfg;
}

bool same_counts(const TrialCounts& a, const TrialCounts& b) {
  return a.trials == b.trials && a.total_bits == b.total_bits &&
         a.index_bit_errors == b.index_bit_errors &&
         a.symbol_bit_errors == b.symbol_bit_errors &&
         a.symbol_bit_errors_after_miss == b.symbol_bit_errors_after_miss &&
         a.groups == b.groups && a.groups_index_missed == b.groups_index_missed;
}

}  // namespace

TEST_CASE("a near-noiseless run is error free in both directions") {
  LinkConfig cfg = quick_uplink();
  cfg.snr_points_db = {120.0};
  for (Direction dir : {Direction::kUplink, Direction::kDownlink}) {
    cfg.direction = dir;
    cfg.n_tx = dir == Direction::kUplink ? 1 : 2;
    cfg.n_rx = dir == Direction::kUplink ? 2 : 1;
    const Simulator sim(cfg);
    const BerRecord rec = sim.run_point_serial(0);
    CHECK(rec.counts.bit_errors() == 0);
    CHECK(rec.ber == 0.0);
  }
}

TEST_CASE("bit accounting matches the per-group budget") {
  const Simulator sim(quick_uplink());
  const BerRecord rec = sim.run_point_serial(0);
  // 2 users x 16 groups x (4 index + 12 symbol bits).
  CHECK(rec.counts.total_bits == rec.counts.trials * 2 * 16 * 16);
  CHECK(rec.counts.groups == rec.counts.trials * 2 * 16);
  CHECK(rec.counts.index_bit_errors <= rec.counts.total_bits);
  CHECK(rec.counts.symbol_bit_errors_after_miss <= rec.counts.symbol_bit_errors);
  CHECK(rec.counts.groups_index_missed <= rec.counts.groups);
}

TEST_CASE("repeated runs and worker counts give identical tallies") {
  const Simulator sim(quick_uplink());
  const BerRecord serial_a = sim.run_point_serial(0);
  const BerRecord serial_b = sim.run_point_serial(0);
  CHECK(same_counts(serial_a.counts, serial_b.counts));
  for (int workers : {2, 4, 8}) {
    const BerRecord par = sim.run_point(0, workers);
    CHECK(same_counts(serial_a.counts, par.counts));
  }
}

TEST_CASE("the stopping rule honors minimums and the cap") {
  // Plenty of errors at 0 dB: stops exactly at min_trials.
  LinkConfig cfg = quick_uplink();
  cfg.snr_points_db = {0.0};
  cfg.min_trials = 40;
  cfg.max_trials = 400;
  cfg.min_bit_errors = 1;
  CHECK(Simulator(cfg).run_point_serial(0).counts.trials == 40);

  // No errors at 120 dB: runs to the cap while hunting for errors.
  cfg.snr_points_db = {120.0};
  cfg.min_trials = 40;
  cfg.max_trials = 95;
  CHECK(Simulator(cfg).run_point_serial(0).counts.trials == 95);

  // Error quota already satisfied by the first batch: no extra rounds.
  cfg.snr_points_db = {0.0};
  cfg.min_trials = 40;
  cfg.max_trials = 4000;
  cfg.min_bit_errors = 10;
  CHECK(Simulator(cfg).run_point_serial(0).counts.trials == 40);
}

TEST_CASE("low SNR errors are dominated by missed index sets") {
  LinkConfig cfg = quick_uplink();
  cfg.snr_points_db = {0.0};
  cfg.min_trials = 200;
  cfg.max_trials = 200;
  const BerRecord rec = Simulator(cfg).run_point_serial(0);
  CHECK(rec.counts.groups_index_missed > 0);
  CHECK(rec.counts.symbol_bit_errors_after_miss > 0);
  CHECK(rec.counts.index_bit_errors > 0);
}

TEST_CASE("a full sweep is reproducible and ordered by SNR") {
  LinkConfig cfg = quick_uplink();
  cfg.snr_points_db = {0.0, 20.0, 40.0};
  cfg.min_trials = 150;
  cfg.max_trials = 150;
  const SweepResult a = run_sweep(cfg);
  cfg.workers = 4;
  const SweepResult b = run_sweep(cfg);
  REQUIRE(a.records.size() == 3);
  REQUIRE(b.records.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(same_counts(a.records[i].counts, b.records[i].counts));
    CHECK(a.records[i].snr_db == cfg.snr_points_db[i]);
  }
  CHECK(a.records.front().ber > a.records.back().ber);
}

TEST_CASE("the flat single-user baseline matches the closed form") {
  LinkConfig cfg;
  cfg.scheme = Scheme::kOfdm;
  cfg.n_total = 1;
  cfg.n_cp = 0;
  cfg.n_group = 1;
  cfg.k_active = 1;
  cfg.order = 4;
  cfg.n_users = 1;
  cfg.n_tx = 1;
  cfg.n_rx = 1;
  cfg.n_taps = 1;
  cfg.snr_points_db = {10.0};
  cfg.min_trials = 60000;
  cfg.max_trials = 60000;
  cfg.min_bit_errors = 0;
  cfg.seed = 12345;
  const BerRecord rec = Simulator(cfg).run_point_serial(0);
  const double expect = testutil::rayleigh_qpsk_ber(std::pow(10.0, 1.0));
  const double sigma =
      testutil::binom_sigma(expect, static_cast<double>(rec.counts.total_bits));
  CHECK(std::abs(rec.ber - expect) < 3.0 * sigma);
}

TEST_CASE("turning off the power boost changes the waveform scale only") {
  LinkConfig cfg = quick_uplink();
  cfg.power_normalization = false;
  const BerRecord rec = Simulator(cfg).run_point_serial(0);
  CHECK(rec.counts.trials == 60);
  CHECK(rec.counts.total_bits > 0);
}

TEST_CASE("papr sampling is deterministic for any worker count") {
  const SchemeParams p = SchemeParams::ofdm_im(64, 16, 8, 6, 4);
  const auto serial = sample_papr(p, 500, 3, 1);
  const auto parallel = sample_papr(p, 500, 3, 4);
  CHECK(serial == parallel);
  const auto rerun = sample_papr(p, 500, 3, 1);
  CHECK(serial == rerun);
  const auto other_seed = sample_papr(p, 500, 4, 1);
  CHECK(serial != other_seed);
}

TEST_CASE("analytic-only schemes cannot be simulated") {
  LinkConfig cfg = quick_uplink();
  cfg.scheme = Scheme::kSimOfdm;
  CHECK_THROWS_AS(Simulator{cfg}, ConfigError);
}
