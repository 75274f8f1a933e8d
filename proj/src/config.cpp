#include "ofdmim/config.hpp"

#include <cmath>
#include <cstdio>

#include "ofdmim/frame.hpp"
#include "ofdmim/modem.hpp"

namespace ofdmim {

const char* direction_name(Direction d) {
  return d == Direction::kUplink ? "uplink" : "downlink";
}

Scheme parse_scheme(const std::string& s) {
  if (s == "ofdm-im" || s == "im") return Scheme::kOfdmIm;
  if (s == "ofdm") return Scheme::kOfdm;
  if (s == "sim-ofdm" || s == "sim") return Scheme::kSimOfdm;
  throw ConfigError("unknown scheme '" + s + "' (expected ofdm-im, ofdm, or sim-ofdm)");
}

Direction parse_direction(const std::string& s) {
  if (s == "uplink" || s == "up") return Direction::kUplink;
  if (s == "downlink" || s == "down") return Direction::kDownlink;
  throw ConfigError("unknown direction '" + s + "' (expected uplink or downlink)");
}

LinkConfig LinkConfig::normalized() const {
  LinkConfig out = *this;
  if (scheme == Scheme::kOfdm) {
    out.k_active = out.n_group;
  } else if (scheme == Scheme::kSimOfdm) {
    out.n_group = out.order;
    out.k_active = out.order - 1;
  }
  return out;
}

void LinkConfig::validate() const {
  FrameDims dims{n_total, n_cp, n_group, k_active};
  dims.validate();
  Constellation probe(order);  // rejects unsupported orders
  if (scheme == Scheme::kOfdm && k_active != n_group) {
    throw ConfigError("plain OFDM runs with every subcarrier active");
  }
  if (scheme == Scheme::kSimOfdm && (n_group != order || k_active != order - 1)) {
    throw ConfigError("scheme ties group size to the constellation order");
  }
  if (n_users < 1 || n_tx < 1 || n_rx < 1) {
    throw ConfigError("user and antenna counts must be positive");
  }
  if (direction == Direction::kUplink && n_rx < n_users * n_tx) {
    throw ConfigError("uplink needs n_rx >= n_users * n_tx");
  }
  if (direction == Direction::kDownlink && n_tx < n_users * n_rx) {
    throw ConfigError("downlink needs n_tx >= n_users * n_rx");
  }
  if (n_taps < 1) throw ConfigError("n_taps must be positive");
  if (n_cp < n_taps - 1) {
    throw ConfigError("cyclic prefix must cover the channel delay spread (n_cp >= n_taps - 1)");
  }
  if (snr_points_db.empty()) throw ConfigError("need at least one SNR point");
  for (double s : snr_points_db) {
    if (!std::isfinite(s)) throw ConfigError("SNR points must be finite");
  }
  if (min_trials < 1) throw ConfigError("min_trials must be positive");
  if (max_trials < min_trials) throw ConfigError("max_trials must be >= min_trials");
  if (min_bit_errors < 0) throw ConfigError("min_bit_errors must be nonnegative");
  if (workers < 1) throw ConfigError("workers must be positive");
}

SchemeParams LinkConfig::scheme_params() const {
  SchemeParams p{scheme, n_total, n_cp, n_group, k_active, order};
  p.validate();
  return p;
}

std::string canonical_string(const LinkConfig& cfg) {
  std::string out;
  char buf[64];
  auto add_int = [&](const char* key, long long v) {
    std::snprintf(buf, sizeof(buf), "%s=%lld\n", key, v);
    out += buf;
  };
  out += std::string("scheme=") + scheme_name(cfg.scheme) + "\n";
  out += std::string("direction=") + direction_name(cfg.direction) + "\n";
  add_int("n_total", cfg.n_total);
  add_int("n_cp", cfg.n_cp);
  add_int("n_group", cfg.n_group);
  add_int("k_active", cfg.k_active);
  add_int("order", cfg.order);
  add_int("n_users", cfg.n_users);
  add_int("n_tx", cfg.n_tx);
  add_int("n_rx", cfg.n_rx);
  add_int("n_taps", cfg.n_taps);
  out += "snr_points_db=";
  for (std::size_t i = 0; i < cfg.snr_points_db.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%s%.17g", i ? "," : "", cfg.snr_points_db[i]);
    out += buf;
  }
  out += "\n";
  add_int("min_trials", cfg.min_trials);
  add_int("max_trials", cfg.max_trials);
  add_int("min_bit_errors", cfg.min_bit_errors);
  add_int("seed", static_cast<long long>(cfg.seed));
  add_int("power_normalization", cfg.power_normalization ? 1 : 0);
  add_int("squared_metric", cfg.squared_metric ? 1 : 0);
  return out;
}

std::uint64_t config_hash(const LinkConfig& cfg) {
  const std::string s = canonical_string(cfg);
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace ofdmim
