/**
 * @file ofdmim_main.cpp
 * @brief Command-line front end: BER sweeps, PAPR CCDF sampling, and
 *        spectral-efficiency tables for the index-modulation link simulator.
 *
 * Exit codes: 0 success, 2 configuration error, 3 runtime error.
 */

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ofdmim/analytics.hpp"
#include "ofdmim/config.hpp"
#include "ofdmim/harness.hpp"
#include "ofdmim/io.hpp"
#include "ofdmim/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct OutputArgs {
  std::string path = "-";
  std::string format = "csv";
};

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> config_file_tokens(const std::string& path,
                                            const std::set<std::string>& given) {
  std::ifstream f(path);
  if (!f) throw ofdmim::ConfigError("cannot open config file: " + path);
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(f, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ofdmim::ConfigError("malformed config line (expected key=value): " +
                                line);
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ofdmim::ConfigError("malformed config line (empty key): " + line);
    }
    if (key == "config") {
      throw ofdmim::ConfigError("config files cannot include other config files");
    }
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (given.count(key) != 0) continue;  // explicit command-line flags win
    tokens.push_back("--" + key + "=" + value);
  }
  return tokens;
}

// Splices every `--config FILE` occurrence into the `--key=value` tokens the
// file spells out, in place, so plain key=value files configure whichever
// subcommand they follow. Keys also given on the command line (including
// their --no- negations) shadow the file.
std::vector<std::string> expand_config_args(const std::vector<std::string>& args) {
  std::set<std::string> given;
  for (const std::string& a : args) {
    if (a.rfind("--", 0) != 0 || a.size() == 2) continue;
    const auto eq = a.find('=');
    const std::string key =
        a.substr(2, eq == std::string::npos ? std::string::npos : eq - 2);
    if (key == "config") continue;
    given.insert(key);
    if (key.rfind("no-", 0) == 0) given.insert(key.substr(3));
  }
  std::vector<std::string> out;
  out.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    std::string path;
    if (a == "--config") {
      if (i + 1 >= args.size()) {
        throw ofdmim::ConfigError("--config requires a file path");
      }
      path = args[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      path = a.substr(9);
    } else {
      out.push_back(a);
      continue;
    }
    const std::vector<std::string> tokens = config_file_tokens(path, given);
    out.insert(out.end(), tokens.begin(), tokens.end());
  }
  return out;
}

void add_output_options(CLI::App* sub, OutputArgs& out) {
  sub->add_option("--out", out.path, "Output path ('-' for stdout)")
      ->capture_default_str();
  sub->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  // Consumed before parsing by expand_config_args; registered so the option
  // shows up in --help and never trips the unknown-flag check.
  static std::string config_path_doc_only;
  sub->add_option("--config", config_path_doc_only,
                  "Read options from a key=value file (command line wins)");
}

void write_output(const OutputArgs& out, const std::string& content) {
  if (out.path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out.path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + out.path);
}

struct SweepArgs {
  ofdmim::LinkConfig cfg;
  std::string scheme = "ofdm-im";
  std::string direction = "uplink";
  OutputArgs out;
};

void add_link_options(CLI::App* sub, SweepArgs& args) {
  ofdmim::LinkConfig& cfg = args.cfg;
  sub->add_option("--scheme", args.scheme, "ofdm-im | ofdm")->capture_default_str();
  sub->add_option("--direction", args.direction, "uplink | downlink")
      ->capture_default_str();
  sub->add_option("--n-total", cfg.n_total, "Total subcarriers")->capture_default_str();
  sub->add_option("--n-cp", cfg.n_cp, "Cyclic prefix length")->capture_default_str();
  sub->add_option("--n-group", cfg.n_group, "Subcarriers per group")
      ->capture_default_str();
  sub->add_option("--k-active", cfg.k_active, "Active subcarriers per group")
      ->capture_default_str();
  sub->add_option("--order", cfg.order, "Constellation order")->capture_default_str();
  sub->add_option("--users", cfg.n_users, "Number of users")->capture_default_str();
  sub->add_option("--n-tx", cfg.n_tx,
                  "Transmit antennas (per user on uplink, base station on downlink)")
      ->capture_default_str();
  sub->add_option("--n-rx", cfg.n_rx,
                  "Receive antennas (base station on uplink, per user on downlink)")
      ->capture_default_str();
  sub->add_option("--taps", cfg.n_taps, "Channel taps")->capture_default_str();
  sub->add_option("--snr", cfg.snr_points_db, "SNR points in dB")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--min-trials", cfg.min_trials, "Minimum blocks per SNR point")
      ->capture_default_str();
  sub->add_option("--max-trials", cfg.max_trials, "Hard cap on blocks per SNR point")
      ->capture_default_str();
  sub->add_option("--min-bit-errors", cfg.min_bit_errors,
                  "Keep running until this many bit errors accumulate")
      ->capture_default_str();
  sub->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  sub->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
  sub->add_flag("--power-normalization,!--no-power-normalization",
                cfg.power_normalization,
                "Boost active subcarriers by sqrt(N/K) to keep block power fixed");
  sub->add_flag("--squared-metric", cfg.squared_metric,
                "Score index candidates by |x|^2 instead of |x|");
}

struct PaprArgs {
  std::string scheme = "ofdm-im";
  int n_total = 128;
  int n_cp = 16;
  int n_group = 8;
  int k_active = 6;
  int order = 4;
  long long blocks = 10000;
  std::uint64_t seed = 1;
  int workers = 1;
  std::vector<double> thresholds_db;
  OutputArgs out;
};

struct SeArgs {
  int n_total = 128;
  int n_cp = 16;
  int n_group = 8;
  int k_active = 6;
  int order = 4;
  OutputArgs out;
};

int run_sweep_cmd(const SweepArgs& args) {
  ofdmim::LinkConfig cfg = args.cfg;
  cfg.scheme = ofdmim::parse_scheme(args.scheme);
  cfg.direction = ofdmim::parse_direction(args.direction);
  const ofdmim::SweepResult result = ofdmim::run_sweep(cfg);
  write_output(args.out, args.out.format == "csv" ? ofdmim::sweep_to_csv(result)
                                                  : ofdmim::sweep_to_json(result));
  return kExitOk;
}

ofdmim::SchemeParams papr_params(const PaprArgs& args) {
  using ofdmim::SchemeParams;
  switch (ofdmim::parse_scheme(args.scheme)) {
    case ofdmim::Scheme::kOfdm:
      return SchemeParams::ofdm(args.n_total, args.n_cp, args.order);
    case ofdmim::Scheme::kSimOfdm:
      return SchemeParams::sim_ofdm(args.n_total, args.n_cp, args.order);
    case ofdmim::Scheme::kOfdmIm:
    default:
      return SchemeParams::ofdm_im(args.n_total, args.n_cp, args.n_group,
                                   args.k_active, args.order);
  }
}

int run_papr_cmd(const PaprArgs& args) {
  const ofdmim::SchemeParams params = papr_params(args);
  if (args.workers < 1) throw ofdmim::ConfigError("workers must be positive");
  const std::vector<double> samples =
      ofdmim::sample_papr(params, args.blocks, args.seed, args.workers);

  ofdmim::PaprReport report;
  report.params = params;
  report.n_blocks = args.blocks;
  report.seed = args.seed;
  report.bound_db = ofdmim::papr_bound_db(params);
  report.max_sample_db = *std::max_element(samples.begin(), samples.end());

  std::vector<double> thresholds = args.thresholds_db;
  if (thresholds.empty()) {
    const double top = std::ceil(report.bound_db) + 1.0;
    for (double t = 0.0; t <= top; t += 0.5) thresholds.push_back(t);
  }
  report.ccdf = ofdmim::papr_ccdf(samples, thresholds);

  write_output(args.out, args.out.format == "csv" ? ofdmim::papr_to_csv(report)
                                                  : ofdmim::papr_to_json(report));
  return kExitOk;
}

int run_se_cmd(const SeArgs& args) {
  using ofdmim::SchemeParams;
  std::vector<ofdmim::SeRow> rows;
  const SchemeParams im = SchemeParams::ofdm_im(args.n_total, args.n_cp,
                                                args.n_group, args.k_active,
                                                args.order);
  rows.push_back({im, ofdmim::spectral_efficiency(im)});
  const SchemeParams plain = SchemeParams::ofdm(args.n_total, args.n_cp, args.order);
  rows.push_back({plain, ofdmim::spectral_efficiency(plain)});
  try {
    const SchemeParams sim =
        SchemeParams::sim_ofdm(args.n_total, args.n_cp, args.order);
    rows.push_back({sim, ofdmim::spectral_efficiency(sim)});
  } catch (const ofdmim::ConfigError&) {
    // Constellation-tied variant does not fit this numerology; skip its row.
  }
  write_output(args.out, args.out.format == "csv" ? ofdmim::se_to_csv(rows)
                                                  : ofdmim::se_to_json(rows));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-user OFDM index-modulation link simulator"};
  app.set_version_flag("--version", ofdmim::kVersion);
  app.require_subcommand(1);

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo BER sweep over SNR");
  add_link_options(sweep, sweep_args);
  add_output_options(sweep, sweep_args.out);

  PaprArgs papr_args;
  CLI::App* papr = app.add_subcommand("papr", "Empirical PAPR CCDF of random blocks");
  papr->add_option("--scheme", papr_args.scheme, "ofdm-im | ofdm | sim-ofdm")
      ->capture_default_str();
  papr->add_option("--n-total", papr_args.n_total, "Total subcarriers")
      ->capture_default_str();
  papr->add_option("--n-cp", papr_args.n_cp, "Cyclic prefix length")
      ->capture_default_str();
  papr->add_option("--n-group", papr_args.n_group, "Subcarriers per group")
      ->capture_default_str();
  papr->add_option("--k-active", papr_args.k_active, "Active subcarriers per group")
      ->capture_default_str();
  papr->add_option("--order", papr_args.order, "Constellation order")
      ->capture_default_str();
  papr->add_option("--blocks", papr_args.blocks, "Number of random blocks")
      ->capture_default_str();
  papr->add_option("--thresholds", papr_args.thresholds_db,
                   "CCDF thresholds in dB (default: 0.5 dB grid up to the bound)")
      ->delimiter(',');
  papr->add_option("--seed", papr_args.seed, "Master seed")->capture_default_str();
  papr->add_option("--workers", papr_args.workers, "Worker threads")
      ->capture_default_str();
  add_output_options(papr, papr_args.out);

  SeArgs se_args;
  CLI::App* se = app.add_subcommand("se", "Spectral-efficiency table");
  se->add_option("--n-total", se_args.n_total, "Total subcarriers")
      ->capture_default_str();
  se->add_option("--n-cp", se_args.n_cp, "Cyclic prefix length")
      ->capture_default_str();
  se->add_option("--n-group", se_args.n_group, "Subcarriers per group")
      ->capture_default_str();
  se->add_option("--k-active", se_args.k_active, "Active subcarriers per group")
      ->capture_default_str();
  se->add_option("--order", se_args.order, "Constellation order")
      ->capture_default_str();
  add_output_options(se, se_args.out);

  std::vector<std::string> cli_args(argv + 1, argv + argc);
  try {
    cli_args = expand_config_args(cli_args);
  } catch (const ofdmim::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  }
  std::reverse(cli_args.begin(), cli_args.end());

  try {
    app.parse(cli_args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (app.got_subcommand(sweep)) return run_sweep_cmd(sweep_args);
    if (app.got_subcommand(papr)) return run_papr_cmd(papr_args);
    if (app.got_subcommand(se)) return run_se_cmd(se_args);
    std::cerr << "no subcommand selected\n";
    return kExitConfig;
  } catch (const ofdmim::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
