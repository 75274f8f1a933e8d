#include "ofdmim/harness.hpp"

#include <omp.h>

#include <bit>
#include <chrono>
#include <cmath>

namespace ofdmim {

namespace {

double snr_db_to_linear(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

LinkConfig normalized_and_checked(const LinkConfig& cfg) {
  LinkConfig out = cfg.normalized();
  out.validate();
  if (out.scheme == Scheme::kSimOfdm) {
    throw ConfigError(
        "sim-ofdm is supported for rate and PAPR reporting only; BER sweeps "
        "take ofdm-im or ofdm");
  }
  return out;
}

}  // namespace

TrialCounts& TrialCounts::operator+=(const TrialCounts& o) {
  trials += o.trials;
  total_bits += o.total_bits;
  index_bit_errors += o.index_bit_errors;
  symbol_bit_errors += o.symbol_bit_errors;
  symbol_bit_errors_after_miss += o.symbol_bit_errors_after_miss;
  groups += o.groups;
  groups_index_missed += o.groups_index_missed;
  return *this;
}

Simulator::Simulator(const LinkConfig& cfg)
    : cfg_(normalized_and_checked(cfg)),
      table_(cfg_.n_group, cfg_.k_active),
      constellation_(cfg_.order),
      metric_(cfg_.squared_metric ? DetectorMetric::kMagnitudeSquared
                                  : DetectorMetric::kMagnitude),
      scale_(cfg_.power_normalization ? power_scale(cfg_.n_group, cfg_.k_active)
                                      : 1.0),
      group_bits_(table_.index_bits() +
                  cfg_.k_active * constellation_.bits_per_symbol()) {}

Simulator::StreamTx Simulator::draw_stream(Rng& rng, arma::cx_vec& block) const {
  const int g_count = cfg_.n_groups();
  const int k = cfg_.k_active;
  const int b = constellation_.bits_per_symbol();
  const int p1 = table_.index_bits();

  StreamTx tx;
  tx.index_vals.resize(static_cast<std::size_t>(g_count));
  tx.labels.resize(static_cast<std::size_t>(g_count) * static_cast<std::size_t>(k));

  std::vector<std::vector<cx>> groups(static_cast<std::size_t>(g_count));
  std::vector<cx> symbols(static_cast<std::size_t>(k));
  for (int g = 0; g < g_count; ++g) {
    const std::uint64_t v = rng.bits_value(p1);
    tx.index_vals[static_cast<std::size_t>(g)] = v;
    for (int i = 0; i < k; ++i) {
      const auto label = static_cast<std::uint32_t>(rng.bits_value(b));
      tx.labels[static_cast<std::size_t>(g * k + i)] = label;
      symbols[static_cast<std::size_t>(i)] = constellation_.map(label);
    }
    groups[static_cast<std::size_t>(g)] =
        assemble_group(table_.row(v), symbols, cfg_.n_group);
  }
  block = interleave_groups(groups) * scale_;
  return tx;
}

void Simulator::detect_streams(const arma::cx_mat& estimates,
                               const std::vector<StreamTx>& tx,
                               TrialCounts& c) const {
  const int g_count = cfg_.n_groups();
  const int k = cfg_.k_active;
  const double inv_scale = 1.0 / scale_;
  std::vector<cx> eq(static_cast<std::size_t>(cfg_.n_group));
  for (std::size_t s = 0; s < tx.size(); ++s) {
    const arma::cx_vec est = estimates.row(static_cast<arma::uword>(s)).st();
    const auto groups_rx = deinterleave_block(est, cfg_.n_group);
    for (int g = 0; g < g_count; ++g) {
      for (int m = 0; m < cfg_.n_group; ++m) {
        eq[static_cast<std::size_t>(m)] =
            groups_rx[static_cast<std::size_t>(g)][static_cast<std::size_t>(m)] *
            inv_scale;
      }
      const GroupDecision det = detect_group(eq, table_, constellation_, metric_);
      const std::uint64_t v_tx = tx[s].index_vals[static_cast<std::size_t>(g)];
      c.index_bit_errors += std::popcount(v_tx ^ det.row);
      long long sym_errs = 0;
      for (int i = 0; i < k; ++i) {
        sym_errs += std::popcount(tx[s].labels[static_cast<std::size_t>(g * k + i)] ^
                                  det.labels[static_cast<std::size_t>(i)]);
      }
      c.symbol_bit_errors += sym_errs;
      ++c.groups;
      if (v_tx != det.row) {
        ++c.groups_index_missed;
        c.symbol_bit_errors_after_miss += sym_errs;
      }
    }
  }
  c.total_bits += static_cast<long long>(tx.size()) * g_count * group_bits_;
}

TrialCounts Simulator::run_uplink_trial(double rho, Rng& rng) const {
  const int n_users = cfg_.n_users;
  const int n_tx = cfg_.n_tx;
  const int n_rx = cfg_.n_rx;
  const int n_total = cfg_.n_total;
  const int n_streams = n_users * n_tx;

  std::vector<StreamTx> tx(static_cast<std::size_t>(n_streams));
  std::vector<arma::cx_mat> streams(
      static_cast<std::size_t>(n_users),
      arma::cx_mat(static_cast<arma::uword>(n_tx), static_cast<arma::uword>(n_total)));
  arma::cx_vec block;
  for (int s = 0; s < n_streams; ++s) {
    tx[static_cast<std::size_t>(s)] = draw_stream(rng, block);
    streams[static_cast<std::size_t>(s / n_tx)].row(
        static_cast<arma::uword>(s % n_tx)) = block.st();
  }

  std::vector<ChannelRealization> channels;
  channels.reserve(static_cast<std::size_t>(n_users));
  for (int u = 0; u < n_users; ++u) {
    channels.push_back(draw_channel(rng, cfg_.n_taps, n_rx, n_tx, n_total));
  }

  const double sigma2 = noise_variance(n_users, rho);
  const arma::cx_mat y = apply_uplink(channels, streams, sigma2, rng);

  arma::cx_mat estimates(static_cast<arma::uword>(n_streams),
                         static_cast<arma::uword>(n_total));
  arma::cx_mat h_stack(static_cast<arma::uword>(n_rx),
                       static_cast<arma::uword>(n_streams));
  for (int n = 0; n < n_total; ++n) {
    for (int u = 0; u < n_users; ++u) {
      h_stack.cols(static_cast<arma::uword>(u * n_tx),
                   static_cast<arma::uword>((u + 1) * n_tx - 1)) =
          channels[static_cast<std::size_t>(u)].freq.slice(static_cast<arma::uword>(n));
    }
    const arma::cx_mat w = mmse_filter(h_stack, rho);
    estimates.col(static_cast<arma::uword>(n)) = w * y.col(static_cast<arma::uword>(n));
  }

  TrialCounts c;
  c.trials = 1;
  detect_streams(estimates, tx, c);
  return c;
}

TrialCounts Simulator::run_downlink_trial(double rho, Rng& rng) const {
  const int n_users = cfg_.n_users;
  const int n_tx = cfg_.n_tx;          // base station transmit antennas
  const int n_rx = cfg_.n_rx;          // antennas per user
  const int n_total = cfg_.n_total;
  const int n_streams = n_users * n_rx;

  std::vector<StreamTx> tx(static_cast<std::size_t>(n_streams));
  arma::cx_mat intended(static_cast<arma::uword>(n_streams),
                        static_cast<arma::uword>(n_total));
  arma::cx_vec block;
  for (int s = 0; s < n_streams; ++s) {
    tx[static_cast<std::size_t>(s)] = draw_stream(rng, block);
    intended.row(static_cast<arma::uword>(s)) = block.st();
  }

  std::vector<ChannelRealization> channels;
  channels.reserve(static_cast<std::size_t>(n_users));
  for (int u = 0; u < n_users; ++u) {
    channels.push_back(draw_channel(rng, cfg_.n_taps, n_rx, n_tx, n_total));
  }

  // Per-subcarrier regularized precoder with transmit-power normalization.
  const double sigma2 = noise_variance(n_users, rho);
  arma::cx_mat precoded(static_cast<arma::uword>(n_tx),
                        static_cast<arma::uword>(n_total));
  arma::vec gamma(static_cast<arma::uword>(n_total));
  arma::cx_mat h_stack(static_cast<arma::uword>(n_streams),
                       static_cast<arma::uword>(n_tx));
  for (int n = 0; n < n_total; ++n) {
    for (int u = 0; u < n_users; ++u) {
      h_stack.rows(static_cast<arma::uword>(u * n_rx),
                   static_cast<arma::uword>((u + 1) * n_rx - 1)) =
          channels[static_cast<std::size_t>(u)].freq.slice(static_cast<arma::uword>(n));
    }
    const arma::cx_mat p = mmse_filter(h_stack, rho);
    const double g = precoder_gain(p, n_users);
    gamma(static_cast<arma::uword>(n)) = g;
    precoded.col(static_cast<arma::uword>(n)) =
        g * (p * intended.col(static_cast<arma::uword>(n)));
  }

  // Each user sees its own channel; the receiver only undoes gamma.
  arma::cx_mat estimates(static_cast<arma::uword>(n_streams),
                         static_cast<arma::uword>(n_total));
  for (int u = 0; u < n_users; ++u) {
    const arma::cx_mat y =
        apply_downlink(channels[static_cast<std::size_t>(u)], precoded, sigma2, rng);
    for (int r = 0; r < n_rx; ++r) {
      for (int n = 0; n < n_total; ++n) {
        estimates(static_cast<arma::uword>(u * n_rx + r), static_cast<arma::uword>(n)) =
            y(static_cast<arma::uword>(r), static_cast<arma::uword>(n)) /
            gamma(static_cast<arma::uword>(n));
      }
    }
  }

  TrialCounts c;
  c.trials = 1;
  detect_streams(estimates, tx, c);
  return c;
}

TrialCounts Simulator::run_trial(double rho, Rng& rng) const {
  return cfg_.direction == Direction::kUplink ? run_uplink_trial(rho, rng)
                                              : run_downlink_trial(rho, rng);
}

// Shared stopping rule: a first round of min_trials, then quarter-sized
// rounds until the point has both enough trials and enough bit errors, or
// hits max_trials. Round boundaries depend only on integer tallies, so every
// execution produces the same trial set.
template <typename RunRound>
BerRecord Simulator::run_point_impl(int point_idx, RunRound&& run_round) const {
  const auto t0 = std::chrono::steady_clock::now();
  const double snr_db = cfg_.snr_points_db[static_cast<std::size_t>(point_idx)];
  const double rho = snr_db_to_linear(snr_db);

  TrialCounts total;
  long long done = 0;
  while (true) {
    long long round = done == 0 ? cfg_.min_trials
                                : std::max<long long>(cfg_.min_trials / 4, 1);
    round = std::min(round, cfg_.max_trials - done);
    run_round(done, done + round, rho, total);
    done += round;
    const bool satisfied =
        done >= cfg_.min_trials && total.bit_errors() >= cfg_.min_bit_errors;
    if (satisfied || done >= cfg_.max_trials) break;
  }

  BerRecord rec;
  rec.snr_db = snr_db;
  rec.counts = total;
  rec.ber = total.total_bits == 0
                ? 0.0
                : static_cast<double>(total.bit_errors()) /
                      static_cast<double>(total.total_bits);
  rec.wall_time_s = elapsed_s(t0);
  return rec;
}

BerRecord Simulator::run_point_serial(int point_idx) const {
  return run_point_impl(point_idx, [&](long long begin, long long end, double rho,
                                       TrialCounts& total) {
    for (long long t = begin; t < end; ++t) {
      Rng rng(stream_seed(cfg_.seed, static_cast<std::uint64_t>(point_idx),
                          static_cast<std::uint64_t>(t)));
      total += run_trial(rho, rng);
    }
  });
}

BerRecord Simulator::run_point(int point_idx, int workers) const {
  check_arg(workers >= 1, "workers must be positive");
  if (workers == 1) return run_point_serial(point_idx);
  return run_point_impl(point_idx, [&](long long begin, long long end, double rho,
                                       TrialCounts& total) {
#pragma omp parallel num_threads(workers)
    {
      TrialCounts local;
#pragma omp for schedule(dynamic, 4) nowait
      for (long long t = begin; t < end; ++t) {
        Rng rng(stream_seed(cfg_.seed, static_cast<std::uint64_t>(point_idx),
                            static_cast<std::uint64_t>(t)));
        local += run_trial(rho, rng);
      }
#pragma omp critical
      total += local;
    }
  });
}

SweepResult run_sweep(const LinkConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  Simulator sim(cfg);
  SweepResult out;
  out.config = sim.config();
  out.records.reserve(sim.config().snr_points_db.size());
  for (std::size_t i = 0; i < sim.config().snr_points_db.size(); ++i) {
    out.records.push_back(
        sim.run_point(static_cast<int>(i), sim.config().workers));
  }
  out.wall_time_s = elapsed_s(t0);
  return out;
}

std::vector<double> sample_papr(const SchemeParams& params, long long n_blocks,
                                std::uint64_t seed, int workers) {
  params.validate();
  check_arg(n_blocks >= 1, "need at least one block");
  check_arg(workers >= 1, "workers must be positive");

  Constellation constellation(params.order);
  const bool grouped = params.scheme != Scheme::kOfdm;
  // Plain OFDM loads every subcarrier; no combination table involved.
  const LookupTable table = grouped ? LookupTable(params.n_group, params.k_active)
                                    : LookupTable(1, 1);
  const double scale =
      grouped ? power_scale(params.n_group, params.k_active) : 1.0;
  const int b = constellation.bits_per_symbol();

  auto one_block = [&](long long t) {
    Rng rng(stream_seed(seed, 0, static_cast<std::uint64_t>(t)));
    arma::cx_vec freq(static_cast<arma::uword>(params.n_total));
    if (!grouped) {
      for (int n = 0; n < params.n_total; ++n) {
        freq(static_cast<arma::uword>(n)) =
            constellation.map(static_cast<std::uint32_t>(rng.bits_value(b)));
      }
    } else {
      const int g_count = params.n_groups();
      std::vector<std::vector<cx>> groups(static_cast<std::size_t>(g_count));
      std::vector<cx> symbols(static_cast<std::size_t>(params.k_active));
      for (int g = 0; g < g_count; ++g) {
        const std::uint64_t v = rng.bits_value(table.index_bits());
        for (int i = 0; i < params.k_active; ++i) {
          symbols[static_cast<std::size_t>(i)] =
              constellation.map(static_cast<std::uint32_t>(rng.bits_value(b)));
        }
        groups[static_cast<std::size_t>(g)] =
            assemble_group(table.row(v), symbols, params.n_group);
      }
      freq = interleave_groups(groups) * scale;
    }
    const arma::cx_vec time = to_time_domain(freq, 0);
    return papr_db(time);
  };

  std::vector<double> samples(static_cast<std::size_t>(n_blocks));
  if (workers == 1) {
    for (long long t = 0; t < n_blocks; ++t) {
      samples[static_cast<std::size_t>(t)] = one_block(t);
    }
  } else {
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
    for (long long t = 0; t < n_blocks; ++t) {
      samples[static_cast<std::size_t>(t)] = one_block(t);
    }
  }
  return samples;
}

}  // namespace ofdmim
