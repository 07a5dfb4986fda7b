// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------
//
// Command-line front end. Every subcommand reads an experiment config and
// honours --seed / --out-dir; failures print a JSON error report on stderr
// and exit nonzero.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "sddfrc/errors.hpp"
#include "sddfrc/harness.hpp"
#include "sddfrc/io.hpp"
#include "sddfrc/kernels.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sddfrc;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kInfeasible = 3, kNoConvergence = 4, kFormat = 5 };

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  std::string out;
};

void add_common(CLI::App* app, Common& c, bool has_out) {
  app->add_option("--config", c.config, "experiment config file")->required()->check(CLI::ExistingFile);
  app->add_option("--seed", c.seed, "master seed (overrides the config)");
  app->add_option("--out-dir", c.out_dir, "output directory");
  if (has_out) app->add_option("--out", c.out, "output file (defaults to a name inside --out-dir)");
}

ExperimentConfig load(const Common& c) {
  ExperimentConfig cfg = load_experiment_config(c.config);
  if (c.seed) cfg.seed = *c.seed;
  return cfg;
}

fs::path output_path(const Common& c, const std::string& default_name) {
  fs::create_directories(c.out_dir);
  if (!c.out.empty()) {
    const fs::path p(c.out);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    return p;
  }
  return fs::path(c.out_dir) / default_name;
}

json residuals_json(const SolverResiduals& r) {
  return {{"primal_residual", r.primal_residual},
          {"dual_residual", r.dual_residual},
          {"duality_gap", r.duality_gap},
          {"iterations", r.iterations}};
}

int report(const char* kind, const std::string& message, int code, json extra = json::object()) {
  json j = {{"error", kind}, {"message", message}, {"exit_code", code}};
  j.update(extra);
  std::cerr << j.dump() << std::endl;
  return code;
}

int run_design_cov(const Common& c, const std::string& variant) {
  const ExperimentConfig cfg = load(c);
  const DesignSpec spec = variant == "sigma_delta" ? cfg.sigma_delta_spec() : cfg.radar_spec();
  StoredDesign d{cfg.array, spec.hash(), solve_beampattern_design(spec, cfg.array)};
  const fs::path out = output_path(c, "covariance_" + variant + ".bin");
  save_design(out, d);
  const ConstraintReport chk = check_design(spec, cfg.array, d.result.covariance, d.result.tau);
  std::cout << json{{"command", "design-cov"},
                    {"variant", variant},
                    {"tau", d.result.tau},
                    {"max_violation", chk.max_violation},
                    {"spec_hash", d.spec_hash},
                    {"residuals", residuals_json(d.result.residuals)},
                    {"output", out.string()}}
                   .dump()
            << std::endl;
  return kOk;
}

int run_synth(const Common& c, const std::string& variant, const std::string& cov_path) {
  const ExperimentConfig cfg = load(c);
  CMatrix C;
  if (!cov_path.empty()) {
    const StoredDesign d = load_design(cov_path);
    if (d.array.n_antennas != cfg.array.n_antennas || d.array.spacing_ratio != cfg.array.spacing_ratio)
      throw ContractError("synth: stored covariance was designed for a different array");
    if (d.spec_hash != cfg.radar_spec().hash() && d.spec_hash != cfg.sigma_delta_spec().hash())
      throw ContractError("synth: stored covariance does not match the design section of the config");
    C = d.result.covariance;
  } else {
    const DesignSpec spec = variant == "sigma_delta" ? cfg.sigma_delta_spec() : cfg.radar_spec();
    C = solve_beampattern_design(spec, cfg.array).covariance;
  }
  const WaveformMatrix X = synthesize_radar(C, cfg.block_length, cfg.seed, cfg.mixing);
  const fs::path out = output_path(c, "radar_waveform.bin");
  save_waveform(out, X);
  std::cout << json{{"command", "synth"}, {"antennas", X.antennas()}, {"length", X.length()}, {"output", out.string()}}
                   .dump()
            << std::endl;
  return kOk;
}

int run_dfrc(const Common& c, std::optional<double> delta, int trial) {
  const ExperimentConfig cfg = load(c);
  const double d = delta ? *delta : cfg.deltas.front();
  if (!(d > 0.0 && d < 1.0)) throw ContractError("dfrc: --delta must lie in (0, 1)");
  if (trial < 0) throw ContractError("dfrc: --trial must be >= 0");
  const DesignPair designs = design_covariances(cfg);
  const TrialWaveforms w = simulate_trial(cfg, designs, d, trial);
  fs::create_directories(c.out_dir);
  json files = json::array();
  auto save = [&](const char* name, const WaveformMatrix& x) {
    if (x.entries.size() == 0) return;
    const fs::path p = fs::path(c.out_dir) / name;
    save_waveform(p, x);
    files.push_back(p.string());
  };
  save("radar.bin", w.radar);
  save("unquantized.bin", w.unquantized);
  save("direct_quant.bin", w.direct_quant);
  save("xbar.bin", w.xbar);
  save("sigma_delta.bin", w.sigma_delta);
  std::cout << json{{"command", "dfrc"}, {"delta", d}, {"trial", trial}, {"overloads", w.overloads}, {"outputs", files}}
                   .dump()
            << std::endl;
  return kOk;
}

int run_sweep(const Common& c, const char* name, bool patterns, bool ber) {
  const ExperimentConfig cfg = load(c);
  const DesignPair designs = design_covariances(cfg);
  const ExperimentOutputs out = run_experiment(cfg, designs, c.out_dir, patterns, ber);
  json files = json::array();
  for (const auto& f : out.files) files.push_back(f.string());
  json mse = json::array();
  for (const auto& r : out.beampatterns)
    for (const auto& s : r.schemes) mse.push_back({{"delta", r.delta}, {"scheme", to_string(s.scheme)}, {"mse_db", s.mse_db}});
  std::cout << json{{"command", name},
                    {"tau_radar", designs.radar.tau},
                    {"tau_sigma_delta", designs.sigma_delta.tau},
                    {"mse", mse},
                    {"outputs", files}}
                   .dump()
            << std::endl;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sddfrc: one-bit sigma-delta DFRC waveform design"};
  app.require_subcommand(1);

  Common design_c, synth_c, dfrc_c, bp_c, ber_c, exp_c;
  std::string design_variant = "radar", synth_variant = "radar", cov_path;
  std::optional<double> delta;
  int trial = 0;

  auto* design = app.add_subcommand("design-cov", "solve the beampattern covariance design and store it");
  add_common(design, design_c, true);
  design->add_option("--variant", design_variant, "radar (standard) or sigma_delta (noise-aware)")
      ->check(CLI::IsMember({"radar", "sigma_delta"}));

  auto* synth = app.add_subcommand("synth", "synthesize a radar block X = C^{1/2} W");
  add_common(synth, synth_c, true);
  synth->add_option("--variant", synth_variant, "design to use when --cov is absent")
      ->check(CLI::IsMember({"radar", "sigma_delta"}));
  synth->add_option("--cov", cov_path, "stored covariance from design-cov")->check(CLI::ExistingFile);

  auto* dfrc = app.add_subcommand("dfrc", "design every scheme's waveform for one trial");
  add_common(dfrc, dfrc_c, false);
  dfrc->add_option("--delta", delta, "trade-off factor (defaults to the first configured delta)");
  dfrc->add_option("--trial", trial, "trial index selecting the random streams");

  auto* bp = app.add_subcommand("beampattern", "beampattern experiment: beampattern_*.csv and mse_table.csv");
  add_common(bp, bp_c, false);
  auto* ber = app.add_subcommand("ber", "bit error rate experiment: ber_*.csv");
  add_common(ber, ber_c, false);
  auto* exp = app.add_subcommand("experiment", "both experiments for every configured delta");
  add_common(exp, exp_c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << std::endl;
    return report("usage", e.what(), kUsage);
  }

  try {
    kernels::configure_workers_from_env();
    if (*design) return run_design_cov(design_c, design_variant);
    if (*synth) return run_synth(synth_c, synth_variant, cov_path);
    if (*dfrc) return run_dfrc(dfrc_c, delta, trial);
    if (*bp) return run_sweep(bp_c, "beampattern", true, false);
    if (*ber) return run_sweep(ber_c, "ber", false, true);
    if (*exp) return run_sweep(exp_c, "experiment", true, true);
  } catch (const ParseError& e) {
    return report("config", e.what(), kUsage, {{"line", e.line()}, {"key", e.key()}});
  } catch (const InfeasibleError& e) {
    return report("infeasible", e.what(), kInfeasible, {{"constraint", e.constraint()}, {"violation", e.violation()}});
  } catch (const ConvergenceError& e) {
    return report("convergence", e.what(), kNoConvergence, {{"residuals", residuals_json(e.residuals())}});
  } catch (const FormatError& e) {
    return report("format", e.what(), kFormat);
  } catch (const ContractError& e) {
    return report("contract", e.what(), kUsage);
  } catch (const DomainError& e) {
    return report("domain", e.what(), kUsage);
  } catch (const std::exception& e) {
    return report("internal", e.what(), kFailure);
  }
  return kFailure;
}
