#include <doctest.h>

#include "ofdmim/config.hpp"

using namespace ofdmim;

TEST_CASE("defaults describe a valid two-user uplink") {
  LinkConfig cfg;
  CHECK_NOTHROW(cfg.normalized().validate());
  CHECK(cfg.n_groups() == 16);
  CHECK(cfg.streams_per_user() == 1);
}

TEST_CASE("scheme normalization rewrites derived fields") {
  LinkConfig cfg;
  cfg.scheme = Scheme::kOfdm;
  const LinkConfig plain = cfg.normalized();
  CHECK(plain.k_active == plain.n_group);

  cfg.scheme = Scheme::kSimOfdm;
  cfg.order = 4;
  const LinkConfig sim = cfg.normalized();
  CHECK(sim.n_group == 4);
  CHECK(sim.k_active == 3);
}

TEST_CASE("name parsing accepts the documented spellings") {
  CHECK(parse_scheme("ofdm-im") == Scheme::kOfdmIm);
  CHECK(parse_scheme("im") == Scheme::kOfdmIm);
  CHECK(parse_scheme("ofdm") == Scheme::kOfdm);
  CHECK(parse_scheme("sim-ofdm") == Scheme::kSimOfdm);
  CHECK_THROWS_AS(parse_scheme("qam"), ConfigError);
  CHECK(parse_direction("uplink") == Direction::kUplink);
  CHECK(parse_direction("down") == Direction::kDownlink);
  CHECK_THROWS_AS(parse_direction("sideways"), ConfigError);
}

TEST_CASE("each constraint violation is reported as a configuration error") {
  const LinkConfig base;
  auto expect_bad = [](LinkConfig cfg) {
    CHECK_THROWS_AS(cfg.normalized().validate(), ConfigError);
  };

  LinkConfig cfg = base;
  cfg.n_total = 100;  // not a multiple of the group size
  expect_bad(cfg);

  cfg = base;
  cfg.k_active = 9;
  expect_bad(cfg);

  cfg = base;
  cfg.order = 5;
  expect_bad(cfg);

  cfg = base;
  cfg.n_rx = 1;  // two single-antenna users need two receive antennas
  expect_bad(cfg);

  cfg = base;
  cfg.direction = Direction::kDownlink;  // n_tx=1 cannot serve 2 users
  expect_bad(cfg);

  cfg = base;
  cfg.n_cp = 3;  // shorter than the delay spread
  expect_bad(cfg);

  cfg = base;
  cfg.snr_points_db.clear();
  expect_bad(cfg);

  cfg = base;
  cfg.min_trials = 0;
  expect_bad(cfg);

  cfg = base;
  cfg.max_trials = cfg.min_trials - 1;
  expect_bad(cfg);

  cfg = base;
  cfg.workers = 0;
  expect_bad(cfg);
}

TEST_CASE("downlink dimensions swap the antenna inequality") {
  LinkConfig cfg;
  cfg.direction = Direction::kDownlink;
  cfg.n_tx = 2;
  cfg.n_rx = 1;
  CHECK_NOTHROW(cfg.normalized().validate());
  CHECK(cfg.streams_per_user() == 1);
}

TEST_CASE("the configuration hash tracks semantic fields only") {
  LinkConfig a;
  LinkConfig b = a;
  CHECK(config_hash(a) == config_hash(b));

  b.workers = 8;  // execution detail, not part of the experiment identity
  CHECK(config_hash(a) == config_hash(b));

  b = a;
  b.seed = a.seed + 1;
  CHECK(config_hash(a) != config_hash(b));

  b = a;
  b.k_active = 4;
  CHECK(config_hash(a) != config_hash(b));

  b = a;
  b.snr_points_db = {1.5};
  CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("canonical form lists one field per line") {
  const std::string s = canonical_string(LinkConfig{});
  CHECK(s.find("scheme=ofdm-im\n") != std::string::npos);
  CHECK(s.find("direction=uplink\n") != std::string::npos);
  CHECK(s.find("n_total=128\n") != std::string::npos);
  CHECK(s.find("workers=") == std::string::npos);
}
