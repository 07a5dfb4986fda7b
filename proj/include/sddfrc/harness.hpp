// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sddfrc/array.hpp"
#include "sddfrc/beampattern.hpp"
#include "sddfrc/comms.hpp"
#include "sddfrc/config.hpp"
#include "sddfrc/covariance_design.hpp"
#include "sddfrc/waveform.hpp"

namespace sddfrc {

enum class Scheme { radar_only = 0, unquantized = 1, direct_quant = 2, sigma_delta = 3 };

const char* to_string(Scheme s) noexcept;
Scheme scheme_from_string(const std::string& s);

/// How the unquantized benchmark X* = F^+ B is brought inside the amplitude box.
enum class Normalization {
  box_projection,  // clamp Re and Im to [-1, 1] (nearest boxed block)
  peak_scale,      // scale the block so that max(|Re|, |Im|) = 1
};

struct GridConfig {
  double lo = -90.0;
  double hi = 90.0;
  double step = 0.5;
  std::vector<std::pair<double, double>> mainlobe{{55.0, 65.0}};
  std::vector<std::pair<double, double>> sidelobe{{-90.0, 50.0}, {70.0, 90.0}};

  AngleGrid build() const;
};

struct ExperimentConfig {
  ArrayConfig array;
  GridConfig grid;
  double ripple = 0.1;
  double power_cap = 2.0 / 9.0;
  std::optional<double> theta0;  // mainlobe midpoint when unset
  ChannelConfig channel;
  std::vector<double> deltas{0.1, 0.5, 0.9};
  int block_length = 100;
  int n_trials = 50;
  std::vector<double> snr_db{-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0};
  std::uint64_t seed = 1;
  std::vector<Scheme> schemes{Scheme::radar_only, Scheme::unquantized, Scheme::direct_quant, Scheme::sigma_delta};
  MixingVariance mixing = MixingVariance::unit;
  Normalization normalization = Normalization::box_projection;

  void validate() const;
  bool has(Scheme s) const;

  /// Standard design: no noise offset.
  DesignSpec radar_spec() const;
  /// Sigma-delta-aware design: D(theta) offset on the same grid.
  DesignSpec sigma_delta_spec() const;
};

/// Parse a config document (sections experiment, array, design, channel).
/// Missing keys keep their defaults; unknown keys are ParseErrors.
ExperimentConfig experiment_config_from(const ConfigDocument& doc);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// The two covariances every experiment starts from.
struct DesignPair {
  DesignSpec radar_spec;
  DesignResult radar;
  DesignSpec sigma_delta_spec;
  DesignResult sigma_delta;
};

DesignPair design_covariances(const ExperimentConfig& cfg);

/// Waveforms of every scheme for one trial (channel, symbols, radar block).
struct TrialWaveforms {
  Channel channel;
  CMatrix symbols;
  WaveformMatrix radar;         // X_R from the standard design
  WaveformMatrix unquantized;   // normalized F^+ B
  WaveformMatrix direct_quant;  // sign of F^+ B
  WaveformMatrix xbar;          // pre-modulation block of the sigma-delta scheme
  WaveformMatrix sigma_delta;   // one-bit sigma-delta output
  Eigen::Index overloads = 0;
};

/// Deterministic in (cfg.seed, trial). delta does not enter the random streams,
/// so every delta sees the same channels, symbols and mixing vectors.
TrialWaveforms simulate_trial(const ExperimentConfig& cfg, const DesignPair& designs, double delta, int trial);

struct SchemePattern {
  Scheme scheme;
  Beampattern pattern;
  double mse_db;  // against the radar-only analytic pattern
};

struct BeampatternReport {
  double delta = 0.0;
  std::vector<SchemePattern> schemes;

  const SchemePattern& at(Scheme s) const;
};

BeampatternReport run_beampattern_experiment(const ExperimentConfig& cfg, const DesignPair& designs,
                                             double delta);

struct BerPoint {
  double snr_db;
  Scheme scheme;
  BitErrorCount count;
};

struct BerReport {
  double delta = 0.0;
  std::vector<double> snr_db;
  std::vector<Scheme> schemes;
  std::vector<BerPoint> points;  // snr-major, schemes in the order above

  const BerPoint& at(Scheme s, std::size_t snr_index) const;
};

/// Schemes other than radar_only; SNR = 10 log10(1 / sigma_v^2) with unit-energy symbols.
BerReport run_ber_experiment(const ExperimentConfig& cfg, const DesignPair& designs, double delta);

void write_beampattern_csv(std::ostream& os, const BeampatternReport& r);
void write_ber_csv(std::ostream& os, const BerReport& r);
void write_mse_csv(std::ostream& os, const std::vector<BeampatternReport>& reports);

/// File-name fragment for a trade-off value, e.g. "delta0.5".
std::string delta_tag(double delta);

struct ExperimentOutputs {
  std::vector<BeampatternReport> beampatterns;
  std::vector<BerReport> ber;
  std::vector<std::filesystem::path> files;
};

/// Runs the requested parts for every delta and writes
/// beampattern_<tag>.csv, mse_table.csv and ber_<tag>.csv into out_dir.
ExperimentOutputs run_experiment(const ExperimentConfig& cfg, const DesignPair& designs,
                                 const std::filesystem::path& out_dir, bool beampatterns = true,
                                 bool ber = true);

}  // namespace sddfrc
