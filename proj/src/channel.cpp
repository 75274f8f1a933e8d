#include "ofdmim/channel.hpp"

namespace ofdmim {

arma::cx_vec taps_to_freq(const arma::cx_vec& taps, int n_total) {
  check_arg(n_total >= 1 && taps.n_elem >= 1, "bad DFT size");
  check_arg(taps.n_elem <= static_cast<arma::uword>(n_total),
            "more taps than subcarriers");
  arma::cx_vec padded(static_cast<arma::uword>(n_total), arma::fill::zeros);
  padded.head(taps.n_elem) = taps;
  return arma::fft(padded);
}

ChannelRealization draw_channel(Rng& rng, int n_taps, int n_rx, int n_tx,
                                int n_total) {
  check_arg(n_taps >= 1 && n_rx >= 1 && n_tx >= 1 && n_total >= n_taps,
            "bad channel dimensions");
  ChannelRealization ch;
  ch.taps.set_size(static_cast<arma::uword>(n_rx), static_cast<arma::uword>(n_tx),
                   static_cast<arma::uword>(n_taps));
  ch.freq.set_size(static_cast<arma::uword>(n_rx), static_cast<arma::uword>(n_tx),
                   static_cast<arma::uword>(n_total));
  const double tap_var = 1.0 / static_cast<double>(n_taps);
  for (int r = 0; r < n_rx; ++r) {
    for (int t = 0; t < n_tx; ++t) {
      arma::cx_vec taps(static_cast<arma::uword>(n_taps));
      for (int l = 0; l < n_taps; ++l) taps(l) = rng.cnormal(tap_var);
      const arma::cx_vec h = taps_to_freq(taps, n_total);
      for (int l = 0; l < n_taps; ++l) ch.taps(r, t, l) = taps(l);
      for (int n = 0; n < n_total; ++n) ch.freq(r, t, n) = h(n);
    }
  }
  return ch;
}

double noise_variance(int n_users, double rho) {
  check_arg(n_users >= 1 && rho > 0.0, "need positive user count and SNR");
  return static_cast<double>(n_users) / rho;
}

arma::cx_mat apply_uplink(const std::vector<ChannelRealization>& per_user,
                          const std::vector<arma::cx_mat>& streams,
                          double sigma2, Rng& rng) {
  check_arg(!per_user.empty() && per_user.size() == streams.size(),
            "one channel and one stream block per user");
  const int n_rx = per_user[0].n_rx();
  const int n_total = per_user[0].n_total();
  arma::cx_mat y(static_cast<arma::uword>(n_rx), static_cast<arma::uword>(n_total),
                 arma::fill::zeros);
  for (std::size_t u = 0; u < per_user.size(); ++u) {
    const ChannelRealization& ch = per_user[u];
    const arma::cx_mat& x = streams[u];
    check_arg(ch.n_rx() == n_rx && ch.n_total() == n_total &&
                  static_cast<int>(x.n_rows) == ch.n_tx() &&
                  static_cast<int>(x.n_cols) == n_total,
              "user channel/stream dimension mismatch");
    for (int n = 0; n < n_total; ++n) {
      y.col(static_cast<arma::uword>(n)) +=
          ch.freq.slice(static_cast<arma::uword>(n)) * x.col(static_cast<arma::uword>(n));
    }
  }
  if (sigma2 > 0.0) {
    for (arma::uword n = 0; n < y.n_cols; ++n) {
      for (arma::uword r = 0; r < y.n_rows; ++r) y(r, n) += rng.cnormal(sigma2);
    }
  }
  return y;
}

arma::cx_mat apply_downlink(const ChannelRealization& user_channel,
                            const arma::cx_mat& precoded, double sigma2,
                            Rng& rng) {
  const int n_total = user_channel.n_total();
  check_arg(static_cast<int>(precoded.n_rows) == user_channel.n_tx() &&
                static_cast<int>(precoded.n_cols) == n_total,
            "precoded block dimension mismatch");
  arma::cx_mat y(static_cast<arma::uword>(user_channel.n_rx()),
                 static_cast<arma::uword>(n_total));
  for (int n = 0; n < n_total; ++n) {
    y.col(static_cast<arma::uword>(n)) =
        user_channel.freq.slice(static_cast<arma::uword>(n)) *
        precoded.col(static_cast<arma::uword>(n));
  }
  if (sigma2 > 0.0) {
    for (arma::uword n = 0; n < y.n_cols; ++n) {
      for (arma::uword r = 0; r < y.n_rows; ++r) y(r, n) += rng.cnormal(sigma2);
    }
  }
  return y;
}

arma::cx_vec tdl_filter(const arma::cx_vec& x, const arma::cx_vec& taps) {
  check_arg(x.n_elem >= taps.n_elem && taps.n_elem >= 1, "bad filter input");
  arma::cx_vec y(x.n_elem, arma::fill::zeros);
  for (arma::uword t = 0; t < x.n_elem; ++t) {
    const arma::uword l_max = std::min<arma::uword>(taps.n_elem - 1, t);
    cx acc(0.0, 0.0);
    for (arma::uword l = 0; l <= l_max; ++l) acc += taps(l) * x(t - l);
    y(t) = acc;
  }
  return y;
}

}  // namespace ofdmim
