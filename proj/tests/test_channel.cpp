#include <doctest.h>

#include <cmath>

#include "ofdmim/channel.hpp"
#include "ofdmim/frame.hpp"
#include "test_util.hpp"

using namespace ofdmim;

TEST_CASE("tap spectrum equals the defining DFT") {
  Rng rng(20);
  arma::cx_vec taps(5);
  for (auto& t : taps) t = rng.cnormal(0.2);
  const arma::cx_vec h = taps_to_freq(taps, 16);
  arma::cx_vec padded(16, arma::fill::zeros);
  padded.head(5) = taps;
  CHECK(arma::norm(h - testutil::naive_dft(padded), "inf") < 1e-10);
}

TEST_CASE("a single tap gives flat fading") {
  Rng rng(21);
  const ChannelRealization ch = draw_channel(rng, 1, 1, 1, 32);
  const cx h0 = ch.freq(0, 0, 0);
  for (int n = 0; n < 32; ++n) {
    CHECK(std::abs(ch.freq(0, 0, static_cast<arma::uword>(n)) - h0) < 1e-12);
  }
}

TEST_CASE("realizations are deterministic in the seed") {
  Rng a(22), b(22);
  const ChannelRealization x = draw_channel(a, 8, 2, 2, 64);
  const ChannelRealization y = draw_channel(b, 8, 2, 2, 64);
  CHECK(arma::norm(arma::vectorise(x.taps) - arma::vectorise(y.taps), "inf") == 0.0);
  CHECK(arma::norm(arma::vectorise(x.freq) - arma::vectorise(y.freq), "inf") == 0.0);
}

TEST_CASE("per-subcarrier coefficients have unit variance") {
  Rng rng(23);
  const int reps = 20000;
  double sum_pow = 0.0;
  long long count = 0;
  for (int r = 0; r < reps; ++r) {
    const ChannelRealization ch = draw_channel(rng, 4, 1, 1, 8);
    for (int n = 0; n < 8; ++n) {
      sum_pow += std::norm(ch.freq(0, 0, static_cast<arma::uword>(n)));
      ++count;
    }
  }
  CHECK(std::abs(sum_pow / static_cast<double>(count) - 1.0) < 0.02);
}

TEST_CASE("identity channel passes signals through unchanged") {
  ChannelRealization ch;
  const int n_total = 8;
  ch.taps = arma::cx_cube(1, 1, 1, arma::fill::ones);
  ch.freq = arma::cx_cube(1, 1, static_cast<arma::uword>(n_total), arma::fill::ones);
  Rng rng(24);
  arma::cx_mat x(1, static_cast<arma::uword>(n_total));
  for (auto& v : x) v = rng.cnormal(1.0);
  const arma::cx_mat y = apply_uplink({ch}, {x}, 0.0, rng);
  CHECK(arma::norm(arma::vectorise(y - x), "inf") == 0.0);
  const arma::cx_mat yd = apply_downlink(ch, x, 0.0, rng);
  CHECK(arma::norm(arma::vectorise(yd - x), "inf") == 0.0);
}

TEST_CASE("two-user superposition matches explicit arithmetic") {
  const int n_total = 4;
  std::vector<ChannelRealization> chs(2);
  std::vector<arma::cx_mat> xs(2);
  Rng rng(25);
  for (int u = 0; u < 2; ++u) {
    chs[static_cast<std::size_t>(u)].taps = arma::cx_cube(2, 1, 1);
    chs[static_cast<std::size_t>(u)].freq = arma::cx_cube(2, 1, n_total);
    for (auto& v : chs[static_cast<std::size_t>(u)].freq) v = rng.cnormal(1.0);
    xs[static_cast<std::size_t>(u)] = arma::cx_mat(1, n_total);
    for (auto& v : xs[static_cast<std::size_t>(u)]) v = rng.cnormal(1.0);
  }
  const arma::cx_mat y = apply_uplink(chs, xs, 0.0, rng);
  for (int n = 0; n < n_total; ++n) {
    for (int r = 0; r < 2; ++r) {
      cx expect(0, 0);
      for (int u = 0; u < 2; ++u) {
        expect += chs[static_cast<std::size_t>(u)].freq(static_cast<arma::uword>(r), 0,
                                                        static_cast<arma::uword>(n)) *
                  xs[static_cast<std::size_t>(u)](0, static_cast<arma::uword>(n));
      }
      CHECK(std::abs(y(static_cast<arma::uword>(r), static_cast<arma::uword>(n)) -
                     expect) < 1e-13);
    }
  }
}

TEST_CASE("pure noise has the configured variance") {
  ChannelRealization ch;
  const int n_total = 64;
  ch.taps = arma::cx_cube(1, 1, 1, arma::fill::zeros);
  ch.freq = arma::cx_cube(1, 1, static_cast<arma::uword>(n_total), arma::fill::zeros);
  arma::cx_mat x(1, static_cast<arma::uword>(n_total), arma::fill::zeros);
  Rng rng(26);
  const double sigma2 = 0.7;
  double sum_pow = 0.0;
  const int reps = 2000;
  for (int r = 0; r < reps; ++r) {
    const arma::cx_mat y = apply_uplink({ch}, {x}, sigma2, rng);
    sum_pow += arma::accu(arma::square(arma::abs(y)));
  }
  const double est = sum_pow / static_cast<double>(reps * n_total);
  CHECK(std::abs(est - sigma2) < 0.02 * sigma2);
}

TEST_CASE("noiseless path consumes no random draws") {
  ChannelRealization ch;
  ch.taps = arma::cx_cube(1, 1, 1, arma::fill::ones);
  ch.freq = arma::cx_cube(1, 1, 4, arma::fill::ones);
  arma::cx_mat x(1, 4, arma::fill::ones);
  Rng a(27), b(27);
  (void)apply_uplink({ch}, {x}, 0.0, a);
  CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("delay-line convolution with prefix matches the subcarrier model") {
  Rng rng(28);
  const int n_total = 64, n_cp = 16, n_taps = 8;
  for (int rep = 0; rep < 20; ++rep) {
    arma::cx_vec taps(n_taps);
    for (auto& t : taps) t = rng.cnormal(1.0 / n_taps);
    arma::cx_vec x(n_total);
    for (auto& v : x) v = rng.cnormal(1.0);

    const arma::cx_vec tx_time = to_time_domain(x, n_cp);
    const arma::cx_vec rx_time = tdl_filter(tx_time, taps);
    const arma::cx_vec rx_freq = to_freq_domain(rx_time, n_total, n_cp);

    const arma::cx_vec h = taps_to_freq(taps, n_total);
    CHECK(arma::norm(rx_freq - h % x, "inf") < 1e-9);
  }
}

TEST_CASE("noise power follows the multi-user SNR convention") {
  CHECK(noise_variance(1, 10.0) == doctest::Approx(0.1));
  CHECK(noise_variance(32, 10.0) == doctest::Approx(3.2));
  CHECK_THROWS_AS(noise_variance(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(noise_variance(1, 0.0), std::invalid_argument);
}

TEST_CASE("dimension mismatches are rejected") {
  Rng rng(29);
  const ChannelRealization ch = draw_channel(rng, 2, 2, 1, 8);
  arma::cx_mat wrong(2, 8, arma::fill::zeros);  // n_tx is 1, not 2
  CHECK_THROWS_AS((void)apply_uplink({ch}, {wrong}, 0.0, rng), std::invalid_argument);
  CHECK_THROWS_AS((void)apply_downlink(ch, wrong, 0.0, rng), std::invalid_argument);
  CHECK_THROWS_AS((void)draw_channel(rng, 0, 1, 1, 8), std::invalid_argument);
  CHECK_THROWS_AS((void)draw_channel(rng, 9, 1, 1, 8), std::invalid_argument);
}
