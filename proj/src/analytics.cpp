#include "ofdmim/analytics.hpp"

#include <cmath>

#include "ofdmim/lookup_table.hpp"

namespace ofdmim {

namespace {

int log2_exact(int x) {
  int p = 0;
  while ((1 << p) < x) ++p;
  if ((1 << p) != x) throw ConfigError("constellation order must be a power of two");
  return p;
}

}  // namespace

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kOfdmIm: return "ofdm-im";
    case Scheme::kOfdm: return "ofdm";
    case Scheme::kSimOfdm: return "sim-ofdm";
  }
  return "?";
}

void SchemeParams::validate() const {
  if (n_total < 1) throw ConfigError("n_total must be positive");
  if (n_cp < 0) throw ConfigError("n_cp must be nonnegative");
  if (order < 2) throw ConfigError("constellation order must be at least 2");
  log2_exact(order);
  if (scheme == Scheme::kOfdm) return;
  if (n_group < 1 || n_total % n_group != 0) {
    throw ConfigError("n_total must be a multiple of the group size");
  }
  if (k_active < 1 || k_active > n_group) {
    throw ConfigError("active count must be in [1, group size]");
  }
  if (scheme == Scheme::kSimOfdm && (n_group != order || k_active != order - 1)) {
    throw ConfigError("scheme ties group size to the constellation order");
  }
}

SchemeParams SchemeParams::ofdm_im(int n_total, int n_cp, int n_group,
                                   int k_active, int order) {
  SchemeParams p{Scheme::kOfdmIm, n_total, n_cp, n_group, k_active, order};
  p.validate();
  return p;
}

SchemeParams SchemeParams::ofdm(int n_total, int n_cp, int order) {
  SchemeParams p{Scheme::kOfdm, n_total, n_cp, n_total, n_total, order};
  p.validate();
  return p;
}

SchemeParams SchemeParams::sim_ofdm(int n_total, int n_cp, int order) {
  SchemeParams p{Scheme::kSimOfdm, n_total, n_cp, order, order - 1, order};
  p.validate();
  return p;
}

double spectral_efficiency(const SchemeParams& p) {
  p.validate();
  const int b = log2_exact(p.order);
  const int slot = p.n_total + p.n_cp;
  if (p.scheme == Scheme::kOfdm) {
    return static_cast<double>(p.n_total * b) / static_cast<double>(slot);
  }
  const int per_group = index_bit_count(p.n_group, p.k_active) + p.k_active * b;
  return static_cast<double>(p.n_groups() * per_group) / static_cast<double>(slot);
}

double papr_bound_db(const SchemeParams& p) {
  p.validate();
  const int loaded =
      p.scheme == Scheme::kOfdm ? p.n_total : p.n_groups() * p.k_active;
  return 10.0 * std::log10(static_cast<double>(loaded));
}

double papr_db(const arma::cx_vec& time_body) {
  check_arg(time_body.n_elem >= 1, "empty block");
  double peak = 0.0;
  double sum = 0.0;
  for (arma::uword i = 0; i < time_body.n_elem; ++i) {
    const double p = std::norm(time_body(i));
    peak = std::max(peak, p);
    sum += p;
  }
  check_arg(sum > 0.0, "all-zero block has no PAPR");
  const double mean = sum / static_cast<double>(time_body.n_elem);
  return 10.0 * std::log10(peak / mean);
}

std::vector<CcdfPoint> papr_ccdf(const std::vector<double>& samples_db,
                                 const std::vector<double>& thresholds_db) {
  check_arg(!samples_db.empty(), "need at least one sample");
  std::vector<CcdfPoint> out;
  out.reserve(thresholds_db.size());
  for (double th : thresholds_db) {
    std::size_t over = 0;
    for (double s : samples_db) {
      if (s > th) ++over;
    }
    out.push_back({th, static_cast<double>(over) / static_cast<double>(samples_db.size())});
  }
  return out;
}

}  // namespace ofdmim
