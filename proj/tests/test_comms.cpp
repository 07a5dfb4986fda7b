// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sddfrc/comms.hpp"
#include "sddfrc/errors.hpp"
#include "test_util.hpp"

using namespace sddfrc;

TEST_CASE("single-path channel is a scaled conjugate steering vector") {
  const ArrayConfig arr{6, 0.125};
  const cdouble g = std::polar(0.3, 1.1);
  const CMatrix H = channel_from_paths({12.0}, {g}, 1, arr);
  REQUIRE(H.rows() == 1);
  const CVector a = steering_vector(12.0, arr);
  for (int n = 0; n < 6; ++n) CHECK(std::abs(H(0, n) - std::conj(g * a(n))) < 1e-15);
  CHECK_THROWS_AS((channel_from_paths({1.0, 2.0, 3.0}, {g, g, g}, 2, arr)), ContractError);
}

TEST_CASE("generated channel honours the configured ranges") {
  const ChannelConfig cfg;
  const ArrayConfig arr{32, 0.125};
  const Channel ch = generate_channel(cfg, arr, 1234);
  CHECK(ch.H.rows() == 6);
  CHECK(ch.H.cols() == 32);
  REQUIRE(ch.path_angles.size() == 24);
  std::vector<double> sorted = ch.path_angles;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted.front() >= -20.0);
  CHECK(sorted.back() <= 20.0);
  for (std::size_t i = 1; i < sorted.size(); ++i) CHECK(sorted[i] - sorted[i - 1] >= 0.5);
  for (const cdouble& g : ch.path_gains) {
    CHECK(std::abs(g) >= 0.1 - 1e-15);
    CHECK(std::abs(g) <= 0.5 + 1e-15);
  }
  CHECK(testutil::max_abs(ch.H - channel_from_paths(ch.path_angles, ch.path_gains, 4, arr)) == 0.0);
}

TEST_CASE("channel generation is deterministic and validates its config") {
  const ArrayConfig arr{8, 0.125};
  CHECK(generate_channel({}, arr, 5).H == generate_channel({}, arr, 5).H);
  CHECK(generate_channel({}, arr, 5).H != generate_channel({}, arr, 6).H);
  ChannelConfig crowded;
  crowded.min_separation = 5.0;
  CHECK_THROWS_AS(generate_channel(crowded, arr, 1), ContractError);
  ChannelConfig bad;
  bad.n_users = 0;
  CHECK_THROWS_AS(generate_channel(bad, arr, 1), ContractError);
}

TEST_CASE("QPSK symbols, noiseless detection and noise statistics") {
  const CMatrix S = random_qpsk(4, 500, 8);
  const double a = 1.0 / std::numbers::sqrt2;
  for (Eigen::Index i = 0; i < S.size(); ++i) {
    CHECK(std::abs(std::abs(S.data()[i].real()) - a) < 1e-15);
    CHECK(std::abs(std::abs(S.data()[i].imag()) - a) < 1e-15);
  }
  CHECK(std::abs(S.mean()) < 0.05);

  const CMatrix I = CMatrix::Identity(4, 4);
  CHECK(transmit_receive(I, S, 0.0, 1) == S);
  CHECK(bit_error_rate(S, detect_qpsk(transmit_receive(I, S, 0.0, 1))) == 0.0);

  const CMatrix Y = transmit_receive(I, CMatrix::Zero(4, 20000), 0.5, 3);
  CHECK(Y.cwiseAbs2().mean() == doctest::Approx(0.25).epsilon(0.02));
  CHECK_THROWS_AS(transmit_receive(I, CMatrix::Zero(3, 2), 0.1, 1), ContractError);
  CHECK_THROWS_AS(transmit_receive(I, S, -1.0, 1), ContractError);
}

TEST_CASE("bit error counting") {
  const double a = 1.0 / std::numbers::sqrt2;
  CMatrix S(1, 2), T(1, 2);
  S << cdouble(a, a), cdouble(-a, a);
  T << cdouble(a, -a), cdouble(a, -a);
  const BitErrorCount c = count_bit_errors(S, T);
  CHECK(c.bits == 4);
  CHECK(c.errors == 3);
  CHECK(c.rate() == 0.75);
  CHECK(BitErrorCount{}.rate() == 0.0);
  CHECK_THROWS_AS(count_bit_errors(S, CMatrix(2, 1)), ContractError);
}

TEST_CASE("independent guesses give BER near one half") {
  const CMatrix S = random_qpsk(6, 10000, 1);
  const CMatrix G = random_qpsk(6, 10000, 2);
  CHECK(bit_error_rate(S, G) == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("high SNR identity link detects without error") {
  const CMatrix S = random_qpsk(3, 1000, 4);
  const CMatrix Y = transmit_receive(CMatrix::Identity(3, 3), S, 0.01, 9);
  CHECK(bit_error_rate(S, detect_qpsk(Y)) == 0.0);
}
