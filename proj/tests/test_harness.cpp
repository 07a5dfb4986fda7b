// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sddfrc/errors.hpp"
#include "sddfrc/harness.hpp"

using namespace sddfrc;

namespace {

ExperimentConfig tiny_config() {
  ExperimentConfig c;
  c.array = {12, 0.125};
  c.grid.step = 2.0;
  c.channel.n_users = 2;
  c.channel.n_paths = 2;
  c.deltas = {0.5};
  c.block_length = 16;
  c.n_trials = 4;
  c.snr_db = {0.0, 20.0};
  c.seed = 99;
  return c;
}

const DesignPair& tiny_designs() {
  static const DesignPair d = design_covariances(tiny_config());
  return d;
}

}  // namespace

TEST_CASE("scheme names round-trip") {
  for (Scheme s : {Scheme::radar_only, Scheme::unquantized, Scheme::direct_quant, Scheme::sigma_delta})
    CHECK(scheme_from_string(to_string(s)) == s);
  CHECK_THROWS_AS(scheme_from_string("analog"), ContractError);
  CHECK(delta_tag(0.5) == "delta0.5");
}

TEST_CASE("trial simulation is deterministic and delta-independent in its randomness") {
  const ExperimentConfig cfg = tiny_config();
  const TrialWaveforms a = simulate_trial(cfg, tiny_designs(), 0.5, 2);
  const TrialWaveforms b = simulate_trial(cfg, tiny_designs(), 0.5, 2);
  CHECK(a.sigma_delta.entries == b.sigma_delta.entries);
  CHECK(a.unquantized.entries == b.unquantized.entries);
  const TrialWaveforms c = simulate_trial(cfg, tiny_designs(), 0.9, 2);
  CHECK(a.channel.H == c.channel.H);
  CHECK(a.symbols == c.symbols);
  CHECK(a.radar.entries == c.radar.entries);
  const TrialWaveforms d = simulate_trial(cfg, tiny_designs(), 0.5, 3);
  CHECK(a.channel.H != d.channel.H);

  CHECK(is_one_bit(a.sigma_delta.entries));
  CHECK(is_one_bit(a.direct_quant.entries));
  CHECK(is_boxed(a.unquantized.entries));
}

TEST_CASE("schemes can be requested independently") {
  ExperimentConfig cfg = tiny_config();
  cfg.schemes = {Scheme::direct_quant};
  const TrialWaveforms w = simulate_trial(cfg, tiny_designs(), 0.5, 0);
  CHECK(w.direct_quant.entries.size() > 0);
  CHECK(w.sigma_delta.entries.size() == 0);
  const TrialWaveforms all = simulate_trial(tiny_config(), tiny_designs(), 0.5, 0);
  CHECK(w.direct_quant.entries == all.direct_quant.entries);

  const BeampatternReport r = run_beampattern_experiment(cfg, tiny_designs(), 0.5);
  REQUIRE(r.schemes.size() == 1);
  CHECK_THROWS_AS(r.at(Scheme::sigma_delta), ContractError);
}

TEST_CASE("radar-only pattern is the MSE reference") {
  const BeampatternReport r = run_beampattern_experiment(tiny_config(), tiny_designs(), 0.5);
  CHECK(r.at(Scheme::radar_only).mse_db == kMseFloorDb);
  CHECK(r.at(Scheme::sigma_delta).mse_db > r.at(Scheme::radar_only).mse_db);
  std::ostringstream os;
  write_beampattern_csv(os, r);
  CHECK(os.str().rfind("angle_deg,scheme,power_db\n", 0) == 0);
  std::ostringstream ms;
  write_mse_csv(ms, {r});
  CHECK(ms.str().rfind("delta,scheme,mse_db\n", 0) == 0);
}

TEST_CASE("BER estimates stabilise with more trials") {
  ExperimentConfig cfg = tiny_config();
  const BerReport a = run_ber_experiment(cfg, tiny_designs(), 0.5);
  cfg.n_trials = 8;
  const BerReport b = run_ber_experiment(cfg, tiny_designs(), 0.5);
  CHECK(std::find(a.schemes.begin(), a.schemes.end(), Scheme::radar_only) == a.schemes.end());
  for (Scheme s : a.schemes)
    for (std::size_t i = 0; i < a.snr_db.size(); ++i) {
      const BitErrorCount& x = a.at(s, i).count;
      const BitErrorCount& y = b.at(s, i).count;
      CHECK(y.bits == 2 * x.bits);
      const double p = std::max(y.rate(), 1.0 / static_cast<double>(y.bits));
      const double se = std::sqrt(p * (1 - p) / static_cast<double>(x.bits));
      CHECK(std::abs(x.rate() - y.rate()) <= 3 * se + 1e-12);
    }
  std::ostringstream os;
  write_ber_csv(os, a);
  CHECK(os.str().rfind("snr_db,scheme,ber,n_bits\n", 0) == 0);
}

TEST_CASE("config validation") {
  ExperimentConfig c = tiny_config();
  c.n_trials = 0;
  CHECK_THROWS_AS(c.validate(), ContractError);
  c = tiny_config();
  c.block_length = 0;
  CHECK_THROWS_AS(c.validate(), ContractError);
  c = tiny_config();
  c.snr_db.clear();
  CHECK_THROWS_AS(c.validate(), ContractError);
}
