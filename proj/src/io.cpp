#include "ofdmim/io.hpp"

#include <cstdio>

#include <json.hpp>

#include "ofdmim/version.hpp"

namespace ofdmim {

namespace {

using nlohmann::json;

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

std::string hash_hex(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json config_to_json(const LinkConfig& cfg) {
  json j;
  j["scheme"] = scheme_name(cfg.scheme);
  j["direction"] = direction_name(cfg.direction);
  j["n_total"] = cfg.n_total;
  j["n_cp"] = cfg.n_cp;
  j["n_group"] = cfg.n_group;
  j["k_active"] = cfg.k_active;
  j["order"] = cfg.order;
  j["n_users"] = cfg.n_users;
  j["n_tx"] = cfg.n_tx;
  j["n_rx"] = cfg.n_rx;
  j["n_taps"] = cfg.n_taps;
  j["snr_points_db"] = cfg.snr_points_db;
  j["min_trials"] = cfg.min_trials;
  j["max_trials"] = cfg.max_trials;
  j["min_bit_errors"] = cfg.min_bit_errors;
  j["seed"] = cfg.seed;
  j["workers"] = cfg.workers;
  j["power_normalization"] = cfg.power_normalization;
  j["squared_metric"] = cfg.squared_metric;
  return j;
}

json params_to_json(const SchemeParams& p) {
  json j;
  j["scheme"] = scheme_name(p.scheme);
  j["n_total"] = p.n_total;
  j["n_cp"] = p.n_cp;
  j["n_group"] = p.n_group;
  j["k_active"] = p.k_active;
  j["order"] = p.order;
  return j;
}

}  // namespace

std::string sweep_to_csv(const SweepResult& result) {
  std::string out =
      "scheme,direction,snr_db,trials,total_bits,index_bit_errors,"
      "symbol_bit_errors,ber,seed\n";
  char buf[256];
  for (const BerRecord& r : result.records) {
    std::snprintf(buf, sizeof(buf), "%s,%s,%g,%lld,%lld,%lld,%lld,%.6e,%llu\n",
                  scheme_name(result.config.scheme),
                  direction_name(result.config.direction), r.snr_db,
                  r.counts.trials, r.counts.total_bits, r.counts.index_bit_errors,
                  r.counts.symbol_bit_errors, r.ber,
                  static_cast<unsigned long long>(result.config.seed));
    out += buf;
  }
  return out;
}

std::string sweep_to_json(const SweepResult& result) {
  json j;
  j["meta"]["version"] = kVersion;
  j["meta"]["config_hash"] = hash_hex(config_hash(result.config));
  j["meta"]["wall_time_s"] = result.wall_time_s;
  j["meta"]["config"] = config_to_json(result.config);
  j["records"] = json::array();
  for (const BerRecord& r : result.records) {
    json rec;
    rec["snr_db"] = r.snr_db;
    rec["trials"] = r.counts.trials;
    rec["total_bits"] = r.counts.total_bits;
    rec["index_bit_errors"] = r.counts.index_bit_errors;
    rec["symbol_bit_errors"] = r.counts.symbol_bit_errors;
    rec["symbol_bit_errors_after_miss"] = r.counts.symbol_bit_errors_after_miss;
    rec["groups"] = r.counts.groups;
    rec["groups_index_missed"] = r.counts.groups_index_missed;
    rec["ber"] = r.ber;
    rec["wall_time_s"] = r.wall_time_s;
    j["records"].push_back(rec);
  }
  return j.dump(2) + "\n";
}

std::string papr_to_csv(const PaprReport& report) {
  std::string out = "scheme,threshold_db,prob,bound_db,n_blocks,seed\n";
  char buf[192];
  for (const CcdfPoint& p : report.ccdf) {
    std::snprintf(buf, sizeof(buf), "%s,%g,%.8g,%.4f,%lld,%llu\n",
                  scheme_name(report.params.scheme), p.threshold_db, p.prob,
                  report.bound_db, report.n_blocks,
                  static_cast<unsigned long long>(report.seed));
    out += buf;
  }
  return out;
}

std::string papr_to_json(const PaprReport& report) {
  json j;
  j["meta"]["version"] = kVersion;
  j["meta"]["params"] = params_to_json(report.params);
  j["meta"]["n_blocks"] = report.n_blocks;
  j["meta"]["seed"] = report.seed;
  j["bound_db"] = report.bound_db;
  j["max_sample_db"] = report.max_sample_db;
  j["ccdf"] = json::array();
  for (const CcdfPoint& p : report.ccdf) {
    j["ccdf"].push_back({{"threshold_db", p.threshold_db}, {"prob", p.prob}});
  }
  return j.dump(2) + "\n";
}

std::string se_to_csv(const std::vector<SeRow>& rows) {
  std::string out = "scheme,n_total,n_cp,n_group,k_active,order,se\n";
  char buf[192];
  for (const SeRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%d,%d,%d,%s\n",
                  scheme_name(r.params.scheme), r.params.n_total, r.params.n_cp,
                  r.params.n_group, r.params.k_active, r.params.order,
                  fmt("%.10g", r.se).c_str());
    out += buf;
  }
  return out;
}

std::string se_to_json(const std::vector<SeRow>& rows) {
  json j;
  j["meta"]["version"] = kVersion;
  j["rows"] = json::array();
  for (const SeRow& r : rows) {
    json row = params_to_json(r.params);
    row["se"] = r.se;
    j["rows"].push_back(row);
  }
  return j.dump(2) + "\n";
}

}  // namespace ofdmim
