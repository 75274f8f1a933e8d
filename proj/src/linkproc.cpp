#include "ofdmim/linkproc.hpp"

#include <cmath>

namespace ofdmim {

arma::cx_mat mmse_filter(const arma::cx_mat& h, double rho) {
  check_arg(rho > 0.0, "SNR must be positive");
  check_arg(h.is_finite(), "channel matrix must be finite");
  arma::cx_mat gram = h.t() * h;  // .t() conjugate-transposes complex matrices
  gram.diag() += cx(1.0 / rho, 0.0);
  return arma::solve(gram, h.t(), arma::solve_opts::likely_sympd);
}

double precoder_gain(const arma::cx_mat& p, int n_users) {
  check_arg(n_users >= 1, "need at least one user");
  const double frob2 = std::pow(arma::norm(p, "fro"), 2);  // = trace(P P^H)
  check_arg(frob2 > 0.0, "precoder must be nonzero");
  return std::sqrt(static_cast<double>(n_users) / frob2);
}

GroupDecision detect_group(const std::vector<cx>& equalized, const LookupTable& table,
                           const Constellation& c, DetectorMetric metric) {
  const int n = table.n_group();
  const int k = table.k_active();
  check_arg(static_cast<int>(equalized.size()) == n, "group length mismatch");

  std::vector<double> score(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double a = std::abs(equalized[static_cast<std::size_t>(i)]);
    score[static_cast<std::size_t>(i)] =
        metric == DetectorMetric::kMagnitude ? a : a * a;
  }

  GroupDecision out;
  double best = -1.0;
  const std::uint8_t* rows = table.rows_data();
  if (rows != nullptr) {
    for (std::uint64_t v = 0; v < table.n_rows(); ++v) {
      const std::uint8_t* r = rows + v * static_cast<std::uint64_t>(k);
      double d = 0.0;
      for (int i = 0; i < k; ++i) d += score[static_cast<std::size_t>(r[i] - 1)];
      if (d > best) {  // strict > keeps the lowest row on ties
        best = d;
        out.row = v;
      }
    }
  } else {
    for (std::uint64_t v = 0; v < table.n_rows(); ++v) {
      const Combination combo = table.row(v);
      double d = 0.0;
      for (int idx : combo) d += score[static_cast<std::size_t>(idx - 1)];
      if (d > best) {
        best = d;
        out.row = v;
      }
    }
  }

  out.indices = table.row(out.row);
  out.labels.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    out.labels[static_cast<std::size_t>(i)] =
        c.slice(equalized[static_cast<std::size_t>(out.indices[static_cast<std::size_t>(i)] - 1)]);
  }
  return out;
}

}  // namespace ofdmim
