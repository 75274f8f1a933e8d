#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ofdmim/analytics.hpp"
#include "ofdmim/common.hpp"

namespace ofdmim {

enum class Direction { kUplink, kDownlink };

const char* direction_name(Direction d);
Scheme parse_scheme(const std::string& s);        // throws ConfigError
Direction parse_direction(const std::string& s);  // throws ConfigError

/// Full description of one simulated link. Antenna fields follow the link
/// direction: n_tx is per-user transmit antennas on the uplink and base
/// station transmit antennas on the downlink; n_rx is the base station's
/// receive count on the uplink and each user's on the downlink.
struct LinkConfig {
  Scheme scheme = Scheme::kOfdmIm;
  Direction direction = Direction::kUplink;

  int n_total = 128;
  int n_cp = 16;
  int n_group = 8;
  int k_active = 6;
  int order = 4;
  int n_users = 2;
  int n_tx = 1;
  int n_rx = 2;
  int n_taps = 8;

  std::vector<double> snr_points_db = {0, 5, 10, 15, 20, 25, 30, 35, 40};
  long long min_trials = 10000;
  long long max_trials = 100000;
  long long min_bit_errors = 100;
  std::uint64_t seed = 1;
  int workers = 1;
  bool power_normalization = true;
  bool squared_metric = false;

  int n_groups() const { return n_total / n_group; }
  int streams_per_user() const {
    return direction == Direction::kUplink ? n_tx : n_rx;
  }

  /// Rewrites derived fields implied by the scheme: plain OFDM degenerates to
  /// one fully-active group pattern (k_active = n_group), and the
  /// constellation-tied variant forces n_group = order, k_active = order - 1.
  LinkConfig normalized() const;

  /// Throws ConfigError on any violated constraint. Call on the normalized
  /// config.
  void validate() const;

  SchemeParams scheme_params() const;
};

/// Canonical key=value rendering, one field per line; the basis for hashing
/// and the JSON config echo.
std::string canonical_string(const LinkConfig& cfg);

/// FNV-1a over canonical_string, reported in run metadata so results can be
/// matched to the exact configuration that produced them.
std::uint64_t config_hash(const LinkConfig& cfg);

}  // namespace ofdmim
