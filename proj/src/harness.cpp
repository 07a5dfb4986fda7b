// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#include "sddfrc/harness.hpp"

#include <cmath>
#include <exception>
#include <fstream>
#include <ostream>

#include "sddfrc/dfrc.hpp"
#include "sddfrc/errors.hpp"
#include "sddfrc/io.hpp"
#include "sddfrc/rng.hpp"

namespace sddfrc {

namespace {

// Stream tags for derive_stream; a scheme's noise stream also carries the
// scheme id so adding a scheme leaves the others untouched.
enum : std::uint64_t { kChannelStream = 1, kSymbolStream = 2, kMixingStream = 3, kNoiseStream = 4 };

constexpr Scheme kAllSchemes[] = {Scheme::radar_only, Scheme::unquantized, Scheme::direct_quant,
                                  Scheme::sigma_delta};

std::vector<std::pair<double, double>> intervals(const ConfigDocument& doc, const std::string& key) {
  const auto v = doc.numbers("design", key);
  if (v.size() % 2 != 0) throw ParseError("config line " + std::to_string(doc.line("design", key)) + " (design." + key +
                         "): expected pairs lo, hi", doc.line("design", key), "design." + key);
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < v.size(); i += 2) out.emplace_back(v[i], v[i + 1]);
  return out;
}

// Run body(t) for t in [0, n) on the worker pool; the first exception is rethrown.
template <class F>
void parallel_trials(int n, F&& body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < n; ++t) {
    try {
      body(t);
    } catch (...) {
#pragma omp critical(sddfrc_trial_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

const char* to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::radar_only: return "radar_only";
    case Scheme::unquantized: return "unquantized";
    case Scheme::direct_quant: return "direct_quant";
    case Scheme::sigma_delta: return "sigma_delta";
  }
  return "unknown";
}

Scheme scheme_from_string(const std::string& s) {
  for (Scheme k : kAllSchemes)
    if (s == to_string(k)) return k;
  throw ContractError("unknown scheme '" + s + "'");
}

AngleGrid GridConfig::build() const { return AngleGrid::with_regions(lo, hi, step, mainlobe, sidelobe); }

void ExperimentConfig::validate() const {
  array.validate();
  channel.validate();
  if (!(ripple >= 0.0)) throw ContractError("ExperimentConfig: ripple must be >= 0");
  if (!(power_cap > 0.0)) throw ContractError("ExperimentConfig: power_cap must be positive");
  if (deltas.empty()) throw ContractError("ExperimentConfig: at least one delta is required");
  for (double d : deltas)
    if (!(d > 0.0 && d < 1.0)) throw ContractError("ExperimentConfig: every delta must lie in (0, 1)");
  if (block_length < 1) throw ContractError("ExperimentConfig: block_length must be >= 1");
  if (n_trials < 1) throw ContractError("ExperimentConfig: n_trials must be >= 1");
  if (snr_db.empty()) throw ContractError("ExperimentConfig: at least one SNR point is required");
  for (double s : snr_db)
    if (!std::isfinite(s)) throw ContractError("ExperimentConfig: SNR values must be finite");
  if (schemes.empty()) throw ContractError("ExperimentConfig: at least one scheme is required");
  for (std::size_t i = 0; i < schemes.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (schemes[i] == schemes[j]) throw ContractError("ExperimentConfig: duplicate scheme");
}

bool ExperimentConfig::has(Scheme s) const {
  for (Scheme k : schemes)
    if (k == s) return true;
  return false;
}

DesignSpec ExperimentConfig::radar_spec() const {
  DesignSpec spec;
  spec.grid = grid.build();
  spec.theta0 = theta0 ? *theta0 : mainlobe_midpoint(spec.grid);
  spec.ripple = ripple;
  spec.power_cap = power_cap;
  return spec;
}

DesignSpec ExperimentConfig::sigma_delta_spec() const {
  DesignSpec spec = radar_spec();
  spec.noise_offset = quantization_noise_pattern(spec.grid, array);
  return spec;
}

ExperimentConfig experiment_config_from(const ConfigDocument& doc) {
  ExperimentConfig c;
  const std::string ex = "experiment";
  if (doc.has(ex, "seed")) {
    const long long s = doc.integer(ex, "seed");
    if (s < 0) throw ParseError("config line " + std::to_string(doc.line(ex, "seed")) + " (experiment.seed): seed must be >= 0",
                       doc.line(ex, "seed"), "experiment.seed");
    c.seed = static_cast<std::uint64_t>(s);
  }
  if (doc.has(ex, "deltas")) c.deltas = doc.numbers(ex, "deltas");
  if (doc.has(ex, "block_length")) c.block_length = static_cast<int>(doc.integer(ex, "block_length"));
  if (doc.has(ex, "n_trials")) c.n_trials = static_cast<int>(doc.integer(ex, "n_trials"));
  if (doc.has(ex, "snr_db")) c.snr_db = doc.numbers(ex, "snr_db");
  if (doc.has(ex, "schemes")) {
    c.schemes.clear();
    for (const auto& s : doc.strings(ex, "schemes")) {
      try {
        c.schemes.push_back(scheme_from_string(s));
      } catch (const ContractError& e) {
        throw ParseError("config line " + std::to_string(doc.line(ex, "schemes")) + " (experiment.schemes): " + e.what(),
                         doc.line(ex, "schemes"), "experiment.schemes");
      }
    }
  }
  if (doc.has(ex, "mixing_variance")) {
    const auto v = doc.string(ex, "mixing_variance");
    if (v == "unit")
      c.mixing = MixingVariance::unit;
    else if (v == "inv_sqrt_two")
      c.mixing = MixingVariance::inv_sqrt_two;
    else
      throw ParseError("config line " + std::to_string(doc.line(ex, "mixing_variance")) +
                           " (experiment.mixing_variance): expected \"unit\" or \"inv_sqrt_two\"",
                       doc.line(ex, "mixing_variance"), "experiment.mixing_variance");
  }
  if (doc.has(ex, "unquantized_normalization")) {
    const auto v = doc.string(ex, "unquantized_normalization");
    if (v == "box_projection")
      c.normalization = Normalization::box_projection;
    else if (v == "peak_scale")
      c.normalization = Normalization::peak_scale;
    else
      throw ParseError("config line " + std::to_string(doc.line(ex, "unquantized_normalization")) +
                           " (experiment.unquantized_normalization): expected \"box_projection\" or \"peak_scale\"",
                       doc.line(ex, "unquantized_normalization"), "experiment.unquantized_normalization");
  }

  if (doc.has("array", "n_antennas")) c.array.n_antennas = static_cast<int>(doc.integer("array", "n_antennas"));
  if (doc.has("array", "spacing_ratio")) c.array.spacing_ratio = doc.number("array", "spacing_ratio");

  const std::string de = "design";
  if (doc.has(de, "grid_min")) c.grid.lo = doc.number(de, "grid_min");
  if (doc.has(de, "grid_max")) c.grid.hi = doc.number(de, "grid_max");
  if (doc.has(de, "grid_step")) c.grid.step = doc.number(de, "grid_step");
  if (doc.has(de, "mainlobe")) c.grid.mainlobe = intervals(doc, "mainlobe");
  if (doc.has(de, "sidelobe")) c.grid.sidelobe = intervals(doc, "sidelobe");
  if (doc.has(de, "ripple")) c.ripple = doc.number(de, "ripple");
  if (doc.has(de, "power_cap")) c.power_cap = doc.number(de, "power_cap");
  if (doc.has(de, "theta0")) c.theta0 = doc.number(de, "theta0");

  const std::string ch = "channel";
  if (doc.has(ch, "n_users")) c.channel.n_users = static_cast<int>(doc.integer(ch, "n_users"));
  if (doc.has(ch, "n_paths")) c.channel.n_paths = static_cast<int>(doc.integer(ch, "n_paths"));
  if (doc.has(ch, "angle_low")) c.channel.angle_low = doc.number(ch, "angle_low");
  if (doc.has(ch, "angle_high")) c.channel.angle_high = doc.number(ch, "angle_high");
  if (doc.has(ch, "min_separation")) c.channel.min_separation = doc.number(ch, "min_separation");
  if (doc.has(ch, "gain_r0")) c.channel.gain_r0 = doc.number(ch, "gain_r0");
  if (doc.has(ch, "gain_r1_low")) c.channel.gain_r1_low = doc.number(ch, "gain_r1_low");
  if (doc.has(ch, "gain_r1_high")) c.channel.gain_r1_high = doc.number(ch, "gain_r1_high");
  if (doc.has(ch, "noise_variance")) c.channel.noise_variance = doc.number(ch, "noise_variance");

  doc.reject_unconsumed();
  c.validate();
  return c;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  return experiment_config_from(ConfigDocument::load(path));
}

DesignPair design_covariances(const ExperimentConfig& cfg) {
  cfg.validate();
  DesignPair d;
  d.radar_spec = cfg.radar_spec();
  d.radar = solve_beampattern_design(d.radar_spec, cfg.array);
  d.sigma_delta_spec = cfg.sigma_delta_spec();
  d.sigma_delta = solve_beampattern_design(d.sigma_delta_spec, cfg.array);
  return d;
}

TrialWaveforms simulate_trial(const ExperimentConfig& cfg, const DesignPair& designs, double delta, int trial) {
  const auto t = static_cast<std::uint64_t>(trial);
  const Eigen::Index L = cfg.block_length;
  TrialWaveforms w;
  w.channel = generate_channel(cfg.channel, cfg.array, derive_stream(cfg.seed, {kChannelStream, t}));
  w.symbols = random_qpsk(cfg.channel.n_users, L, derive_stream(cfg.seed, {kSymbolStream, t}));
  // Both radar blocks use the same mixing vectors W.
  const std::uint64_t mixing = derive_stream(cfg.seed, {kMixingStream, t});

  const bool need_ls = cfg.has(Scheme::unquantized) || cfg.has(Scheme::direct_quant);
  if (need_ls || cfg.has(Scheme::radar_only)) {
    w.radar = synthesize_radar(designs.radar.covariance, L, mixing, cfg.mixing);
  }
  if (need_ls) {
    const WaveformMatrix xs = unconstrained_ls(build_system(w.channel.H, w.symbols, w.radar, delta));
    if (cfg.has(Scheme::unquantized))
      w.unquantized = cfg.normalization == Normalization::box_projection ? project_to_box(xs) : normalize_amplitude(xs);
    if (cfg.has(Scheme::direct_quant)) w.direct_quant = direct_quantize(xs);
  }
  if (cfg.has(Scheme::sigma_delta)) {
    const WaveformMatrix radar_sd = synthesize_radar(designs.sigma_delta.covariance, L, mixing, cfg.mixing);
    SigmaDeltaDesign sd = design_sd_dfrc(build_system(w.channel.H, w.symbols, radar_sd, delta), cfg.array);
    w.xbar = std::move(sd.xbar);
    w.sigma_delta = std::move(sd.record.output);
    w.overloads = sd.overloads;
  }
  return w;
}

const SchemePattern& BeampatternReport::at(Scheme s) const {
  for (const auto& p : schemes)
    if (p.scheme == s) return p;
  throw ContractError(std::string("BeampatternReport: scheme ") + to_string(s) + " was not run");
}

BeampatternReport run_beampattern_experiment(const ExperimentConfig& cfg, const DesignPair& designs, double delta) {
  cfg.validate();
  const AngleGrid grid = designs.radar_spec.grid;
  const Beampattern reference = analytic_pattern(designs.radar.covariance, grid, cfg.array);

  // Per-trial patterns, reduced below in trial order so the sum is independent
  // of the thread schedule.
  const std::size_t S = cfg.schemes.size();
  std::vector<std::vector<RVector>> per_trial(static_cast<std::size_t>(cfg.n_trials), std::vector<RVector>(S));
  parallel_trials(cfg.n_trials, [&](int t) {
    const TrialWaveforms w = simulate_trial(cfg, designs, delta, t);
    for (std::size_t s = 0; s < S; ++s) {
      const WaveformMatrix* x = nullptr;
      switch (cfg.schemes[s]) {
        case Scheme::radar_only: break;
        case Scheme::unquantized: x = &w.unquantized; break;
        case Scheme::direct_quant: x = &w.direct_quant; break;
        case Scheme::sigma_delta: x = &w.sigma_delta; break;
      }
      if (x) per_trial[static_cast<std::size_t>(t)][s] = empirical_pattern(x->entries, grid, cfg.array).power;
    }
  });

  BeampatternReport rep;
  rep.delta = delta;
  for (std::size_t s = 0; s < S; ++s) {
    SchemePattern sp{cfg.schemes[s], reference, 0.0};
    if (cfg.schemes[s] != Scheme::radar_only) {
      RVector sum = RVector::Zero(static_cast<Eigen::Index>(grid.size()));
      for (const auto& trial : per_trial) sum += trial[s];
      sp.pattern.power = sum / static_cast<double>(cfg.n_trials);
    }
    sp.mse_db = pattern_mse_db(sp.pattern, reference);
    rep.schemes.push_back(std::move(sp));
  }
  return rep;
}

const BerPoint& BerReport::at(Scheme s, std::size_t snr_index) const {
  for (std::size_t i = 0; i < schemes.size(); ++i)
    if (schemes[i] == s && snr_index < snr_db.size()) return points[snr_index * schemes.size() + i];
  throw ContractError(std::string("BerReport: no point for scheme ") + to_string(s));
}

BerReport run_ber_experiment(const ExperimentConfig& cfg, const DesignPair& designs, double delta) {
  cfg.validate();
  ExperimentConfig comm = cfg;
  comm.schemes.clear();
  for (Scheme s : cfg.schemes)
    if (s != Scheme::radar_only) comm.schemes.push_back(s);

  const std::size_t P = cfg.snr_db.size();
  const std::size_t S = comm.schemes.size();
  std::vector<std::vector<BitErrorCount>> counts(static_cast<std::size_t>(cfg.n_trials),
                                                 std::vector<BitErrorCount>(P * S));
  if (S > 0) {
    parallel_trials(cfg.n_trials, [&](int t) {
      const TrialWaveforms w = simulate_trial(comm, designs, delta, t);
      for (std::size_t s = 0; s < S; ++s) {
        const Scheme sc = comm.schemes[s];
        const CMatrix& X = sc == Scheme::unquantized    ? w.unquantized.entries
                           : sc == Scheme::direct_quant ? w.direct_quant.entries
                                                        : w.sigma_delta.entries;
        for (std::size_t p = 0; p < P; ++p) {
          const double sigma_v = std::sqrt(std::pow(10.0, -cfg.snr_db[p] / 10.0));
          const std::uint64_t seed = derive_stream(cfg.seed, {kNoiseStream, static_cast<std::uint64_t>(sc),
                                                              static_cast<std::uint64_t>(t), p});
          counts[static_cast<std::size_t>(t)][p * S + s] =
              count_bit_errors(w.symbols, detect_qpsk(transmit_receive(w.channel.H, X, sigma_v, seed)));
        }
      }
    });
  }

  BerReport rep;
  rep.delta = delta;
  rep.snr_db = cfg.snr_db;
  rep.schemes = comm.schemes;
  for (std::size_t p = 0; p < P; ++p)
    for (std::size_t s = 0; s < S; ++s) {
      BitErrorCount total;
      for (const auto& trial : counts) {
        total.errors += trial[p * S + s].errors;
        total.bits += trial[p * S + s].bits;
      }
      rep.points.push_back({cfg.snr_db[p], comm.schemes[s], total});
    }
  return rep;
}

void write_beampattern_csv(std::ostream& os, const BeampatternReport& r) {
  os << "angle_deg,scheme,power_db\n";
  for (const auto& sp : r.schemes)
    for (std::size_t i = 0; i < sp.pattern.grid.size(); ++i)
      os << format_double(sp.pattern.grid.angles[i]) << ',' << to_string(sp.scheme) << ','
         << format_double(to_db(sp.pattern.power(static_cast<Eigen::Index>(i)))) << '\n';
}

void write_ber_csv(std::ostream& os, const BerReport& r) {
  os << "snr_db,scheme,ber,n_bits\n";
  for (const auto& p : r.points)
    os << format_double(p.snr_db) << ',' << to_string(p.scheme) << ',' << format_double(p.count.rate()) << ','
       << p.count.bits << '\n';
}

void write_mse_csv(std::ostream& os, const std::vector<BeampatternReport>& reports) {
  os << "delta,scheme,mse_db\n";
  for (const auto& r : reports)
    for (const auto& sp : r.schemes)
      os << format_double(r.delta) << ',' << to_string(sp.scheme) << ',' << format_double(sp.mse_db) << '\n';
}

std::string delta_tag(double delta) { return "delta" + format_double(delta); }

ExperimentOutputs run_experiment(const ExperimentConfig& cfg, const DesignPair& designs,
                                 const std::filesystem::path& out_dir, bool beampatterns, bool ber) {
  std::filesystem::create_directories(out_dir);
  ExperimentOutputs out;
  auto open = [&](const std::string& name) {
    const auto path = out_dir / name;
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.files.push_back(path);
    return os;
  };
  for (double delta : cfg.deltas) {
    if (beampatterns) {
      out.beampatterns.push_back(run_beampattern_experiment(cfg, designs, delta));
      auto os = open("beampattern_" + delta_tag(delta) + ".csv");
      write_beampattern_csv(os, out.beampatterns.back());
    }
    if (ber) {
      out.ber.push_back(run_ber_experiment(cfg, designs, delta));
      auto os = open("ber_" + delta_tag(delta) + ".csv");
      write_ber_csv(os, out.ber.back());
    }
  }
  if (beampatterns) {
    auto os = open("mse_table.csv");
    write_mse_csv(os, out.beampatterns);
  }
  return out;
}

}  // namespace sddfrc
