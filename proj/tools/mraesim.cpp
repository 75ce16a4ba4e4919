// Copyright 2026 The mrae Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mrae/experiments.hpp"
#include "mrae/model.hpp"
#include "mrae/units.hpp"

namespace {

using namespace mrae;

struct RunOptions {
  std::string scenario;
  std::string out_dir = ".";
  std::uint64_t seed = 12345;
  int threads = 0;
  double dt = 0.0;
  double n = std::nan("");
  double eps = std::nan("");
  int n_atoms = 0;
  double cap_mhz = 0.0;
  double gamma_scale = 1.0;
  int samples = 0;
};

void add_run_flags(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("id", o.scenario, "scenario id (see --list)");
  cmd->add_option("--scenario", o.scenario, "scenario id");
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--seed", o.seed, "RNG seed for disorder sampling");
  cmd->add_option("--threads", o.threads,
                  "worker threads (0: SIM_THREADS env or hardware)");
  cmd->add_option("--dt", o.dt, "integrator step override, us");
  cmd->add_option("--n", o.n, "ZSS optimization parameter");
  cmd->add_option("--eps", o.eps, "fractional Rabi error");
  cmd->add_option("--N", o.n_atoms, "ensemble atom number");
  cmd->add_option("--cap-mhz", o.cap_mhz, "drive amplitude cap, MHz");
  cmd->add_option("--gamma-scale", o.gamma_scale,
                  "scale factor on all decay rates");
  cmd->add_option("--samples", o.samples, "disorder sample count");
}

ScenarioParams to_params(const RunOptions& o) {
  ScenarioParams p;
  p.n = o.n;
  p.eps = o.eps;
  p.n_atoms = o.n_atoms;
  p.cap_mhz = o.cap_mhz;
  p.gamma_scale = o.gamma_scale;
  p.dt = o.dt;
  p.threads = o.threads;
  p.seed = o.seed;
  p.samples = o.samples;
  return p;
}

int cmd_run(const RunOptions& o, bool list_only) {
  if (list_only) {
    for (const auto& s : scenario_catalog())
      std::cout << s.id << "  " << s.description << "\n";
    return 0;
  }
  if (o.scenario.empty()) {
    std::cerr << "run: missing scenario id (try --list)\n";
    return 1;
  }
  ExperimentResult result;
  try {
    result = run_scenario(o.scenario, to_params(o));
  } catch (const UnknownScenarioError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const IntegrationError& e) {
    std::cerr << "simulation failure: " << e.what() << "\n";
    return 2;
  }
  std::filesystem::create_directories(o.out_dir);
  const auto base =
      (std::filesystem::path(o.out_dir) / result.scenario).string();
  write_file(base + ".csv", to_csv(result));
  write_file(base + ".summary.json", to_json_summary(result));
  std::cout << result.scenario << ": " << result.rows.size()
            << " rows -> " << base << ".csv\n";
  return 0;
}

struct PulseOptions {
  std::string family;
  double n = 1.0;
  double tau = 0.0;       // us; 0 = derive from cap
  double cap_mhz = 0.5;   // max Omega_eff / 2pi
  double big_t = 0.2121;  // adiabatic envelope duration
  int points = 2001;
  double omega_c_mhz = 10.0;
  double delta_over_omega_c = 12.0;
  double vartheta = -two_pi / 4.0;
  double phi = 0.0;
  std::string out_dir = ".";
};

int cmd_pulse(const PulseOptions& o) {
  PulseSet pulse;
  double duration = 0.0;
  if (o.family == "nhqc") {
    const auto tp = nhqc_constant_pulse(omega_from_mhz(o.cap_mhz));
    pulse = tp.pulse;
    duration = tp.duration;
  } else if (o.family == "lr") {
    duration = o.tau > 0.0 ? o.tau : lr_tau_for_cap(omega_from_mhz(o.cap_mhz));
    pulse = lr_pulse_from_angles(lr_invariant_angles(duration));
  } else if (o.family == "zss") {
    duration =
        o.tau > 0.0 ? o.tau : zss_tau_for_cap(o.n, omega_from_mhz(o.cap_mhz));
    pulse = zss_pulse(o.n, duration);
  } else if (o.family == "adiabatic") {
    duration = o.big_t;
    pulse = adiabatic_sine2_pulse(duration);
  } else {
    std::cerr << "unknown pulse family: " << o.family
              << " (expected nhqc|lr|zss|adiabatic)\n";
    return 1;
  }

  EnsembleParams base;
  base.omegaC = omega_from_mhz(o.omega_c_mhz);
  base.delta = o.delta_over_omega_c * base.omegaC;
  const auto env =
      EnsembleEnvelopes::from_pulse(pulse, base, o.vartheta, o.phi);

  ExperimentResult r;
  r.scenario = "pulse_" + o.family;
  r.columns = {"t_us",    "omegaA_over_2pi_mhz", "omegaB_over_2pi_mhz",
               "phiA_rad", "phiB_rad",           "omega_eff_over_2pi_mhz"};
  r.meta.emplace_back("family", o.family);
  r.meta.emplace_back("n", format_double(o.n));
  r.meta.emplace_back("duration_us", format_double(duration));
  for (int k = 0; k < o.points; ++k) {
    const double t = duration * k / (o.points - 1);
    r.rows.push_back({format_double(t),
                      format_double(mhz_from_omega(env.omegaA(t))),
                      format_double(mhz_from_omega(env.omegaB(t))),
                      format_double(env.phiA(t)), format_double(env.phiB(t)),
                      format_double(mhz_from_omega(pulse.omega_eff(t)))});
  }
  std::filesystem::create_directories(o.out_dir);
  const auto base_path =
      (std::filesystem::path(o.out_dir) / r.scenario).string();
  write_file(base_path + ".csv", to_csv(r));
  write_file(base_path + ".summary.json", to_json_summary(r));
  std::cout << r.scenario << ": " << r.rows.size() << " rows -> "
            << base_path << ".csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mraesim: holonomic-gate simulation for a control atom coupled to a "
      "mesoscopic Rydberg ensemble"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI config file with the run options");
  app.allow_config_extras(false);

  RunOptions run_opts;
  bool list_only = false;
  bool dump_config = false;
  CLI::App* run = app.add_subcommand("run", "run a scenario to CSV + JSON");
  run->fallthrough();
  add_run_flags(run, run_opts);
  run->add_flag("--list", list_only, "list scenario ids and exit");
  run->add_flag("--dump-config", dump_config,
                "print the resolved config and exit");

  PulseOptions pulse_opts;
  CLI::App* pulse =
      app.add_subcommand("pulse", "export a drive waveform as CSV");
  pulse->fallthrough();
  pulse->add_option("family", pulse_opts.family,
                    "nhqc | lr | zss | adiabatic");
  pulse->add_option("--n", pulse_opts.n, "ZSS optimization parameter");
  pulse->add_option("--tau", pulse_opts.tau, "cycle duration, us");
  pulse->add_option("--cap-mhz", pulse_opts.cap_mhz,
                    "peak Omega_eff / 2pi, MHz");
  pulse->add_option("--T", pulse_opts.big_t,
                    "adiabatic envelope duration, us");
  pulse->add_option("--points", pulse_opts.points, "samples in the series");
  pulse->add_option("--omega-c-mhz", pulse_opts.omega_c_mhz,
                    "Omega_C / 2pi, MHz");
  pulse->add_option("--delta-over-omega-c", pulse_opts.delta_over_omega_c,
                    "one-photon detuning in units of Omega_C");
  pulse->add_option("--vartheta", pulse_opts.vartheta,
                    "rotation angle, rad");
  pulse->add_option("--phi", pulse_opts.phi, "gate phase, rad");
  pulse->add_option("--out", pulse_opts.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "valid keys: scenario, config, out, seed, threads, dt, n, "
                 "eps, N, cap-mhz, gamma-scale, samples\n";
    return 1;
  }

  try {
    if (run->parsed()) {
      if (dump_config) {
        std::cout << app.config_to_str(true, true);
        return 0;
      }
      return cmd_run(run_opts, list_only);
    }
    return cmd_pulse(pulse_opts);
  } catch (const IntegrationError& e) {
    std::cerr << "simulation failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
