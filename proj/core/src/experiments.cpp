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

#include "mrae/experiments.hpp"

#include <cmath>
#include <random>

#include "mrae/units.hpp"

namespace mrae {

namespace {

constexpr double pi = two_pi / 2.0;
const double w10 = omega_from_mhz(10.0);

std::vector<double> grid_or(double override_value,
                            std::vector<double> defaults) {
  if (!std::isnan(override_value)) return {override_value};
  return defaults;
}

FidelityOptions fidelity_options(const ScenarioParams& p) {
  FidelityOptions fo;
  fo.threads = p.threads;
  fo.dt_override = p.dt;
  return fo;
}

void meta_common(ExperimentResult& r, const ScenarioParams& p) {
  r.meta.emplace_back("seed", std::to_string(p.seed));
  r.meta.emplace_back("gamma_scale", format_double(p.gamma_scale));
  if (p.dt > 0.0) r.meta.emplace_back("dt_us", format_double(p.dt));
}

// Constant-drive effective coupling with Omega_B fixed and
// Omega_A = Omega_B tan(vartheta/2).
double eff_amp(double omega_b, double vartheta, double omega_c,
               double delta) {
  return omega_b / std::abs(std::cos(0.5 * vartheta)) * omega_c /
         (2.0 * delta);
}

ExperimentResult fig3a(const ScenarioParams& p) {
  ExperimentResult r;
  r.columns = {"gate", "gamma_r_khz", "fidelity", "duration_us"};
  r.meta.emplace_back("omega1_over_2pi_mhz", "10");
  meta_common(r, p);
  for (const auto& g : universal_gate_set())
    for (double gr : {0.0, 0.02, 0.04, 0.06, 0.1}) {
      const auto c =
          control_atom_gate(g.theta, g.phi, w10, gr * p.gamma_scale);
      const double f = average_gate_fidelity(c, fidelity_options(p));
      r.rows.push_back({g.name, format_double(khz_from_rate(gr)),
                        format_double(f),
                        format_double(c.schedule.total_duration())});
    }
  return r;
}

EnsembleGateSetup fig3_ensemble_setup(const ScenarioParams& p,
                                      const GateAngles& g) {
  EnsembleGateSetup s;
  s.n_atoms = p.n_atoms > 0 ? p.n_atoms : 4;
  s.omega_c = w10;
  s.delta = 12.0 * w10;
  s.vartheta = g.theta;
  s.phi = g.phi;
  s.family = PulseFamily::nhqc_constant;
  s.omega_eff_cap = eff_amp(w10, g.theta, s.omega_c, s.delta);
  return s;
}

ExperimentResult fig3b(const ScenarioParams& p) {
  ExperimentResult r;
  r.columns = {"gate", "gamma_R_khz", "fidelity", "duration_us"};
  meta_common(r, p);
  for (const auto& g : universal_gate_set())
    for (double gR : {0.0, 0.002, 0.004, 0.008, 0.016}) {
      EnsembleGateSetup s = fig3_ensemble_setup(p, g);
      s.gamma_p = 1.0 * p.gamma_scale;
      s.gamma_R = gR * p.gamma_scale;
      const auto c = ensemble_qubit_gate(s);
      r.rows.push_back({g.name, format_double(khz_from_rate(s.gamma_R)),
                        format_double(average_gate_fidelity(
                            c, fidelity_options(p))),
                        format_double(c.schedule.total_duration())});
    }
  return r;
}

ExperimentResult fig3c(const ScenarioParams& p) {
  ExperimentResult r;
  r.columns = {"gate", "gamma_p_mhz", "fidelity", "duration_us"};
  meta_common(r, p);
  for (const auto& g : universal_gate_set())
    for (double gp : {0.0, 0.5, 1.0, 2.0}) {
      EnsembleGateSetup s = fig3_ensemble_setup(p, g);
      s.gamma_p = gp * p.gamma_scale;
      s.gamma_R = 0.004 * p.gamma_scale;
      const auto c = ensemble_qubit_gate(s);
      r.rows.push_back({g.name, format_double(mhz_from_rate(s.gamma_p)),
                        format_double(average_gate_fidelity(
                            c, fidelity_options(p))),
                        format_double(c.schedule.total_duration())});
    }
  return r;
}

ExperimentResult fig3d(const ScenarioParams& p) {
  ExperimentResult r;
  r.columns = {"n_atoms", "fidelity", "duration_us"};
  meta_common(r, p);
  std::vector<int> grid = {2, 4, 6, 8, 10};
  if (p.n_atoms > 0) grid = {p.n_atoms};
  for (int n_atoms : grid) {
    EnsembleGateSetup s = fig3_ensemble_setup(p, universal_gate_set()[0]);
    s.n_atoms = n_atoms;
    s.gamma_p = 1.0 * p.gamma_scale;
    s.gamma_R = 0.004 * p.gamma_scale;
    const auto c = ensemble_qubit_gate(s);
    r.rows.push_back(
        {std::to_string(n_atoms),
         format_double(average_gate_fidelity(c, fidelity_options(p))),
         format_double(c.schedule.total_duration())});
  }
  return r;
}

TwoQubitSetup fig4_setup(const ScenarioParams& p, const GateAngles& g,
                         bool dissipation) {
  TwoQubitSetup s;
  s.n_atoms = p.n_atoms > 0 ? p.n_atoms : 4;
  s.omega1 = w10;
  s.omega_b = w10;
  s.omega_c = w10;
  s.delta = 12.0 * w10;
  s.v = 2.0 * s.delta;
  s.vartheta = g.theta;
  s.phi = g.phi;
  if (dissipation) {
    s.gamma_r = s.gamma_R = 0.004 * p.gamma_scale;
    s.gamma_p = 1.0 * p.gamma_scale;
  }
  return s;
}

ExperimentResult fig4(const ScenarioParams& p) {
  ExperimentResult r;
  r.columns = {"gate", "n_atoms", "dissipation", "fidelity", "duration_us"};
  meta_common(r, p);
  for (const auto& g : universal_gate_set())
    for (int dissipation : {0, 1}) {
      const TwoQubitSetup s = fig4_setup(p, g, dissipation != 0);
      const auto c = two_qubit_nhqc_gate(s);
      r.rows.push_back({std::string("C") + g.name,
                        std::to_string(s.n_atoms),
                        std::to_string(dissipation),
                        format_double(average_gate_fidelity(
                            c, fidelity_options(p))),
                        format_double(c.schedule.total_duration())});
    }
  return r;
}

EnsembleGateSetup fig56_setup(const ScenarioParams& p) {
  EnsembleGateSetup s;
  s.n_atoms = p.n_atoms > 0 ? p.n_atoms : 4;
  s.omega_c = w10;
  s.delta = 12.0 * w10;
  s.vartheta = -pi / 2.0;
  s.phi = 0.0;
  s.omega_eff_cap =
      omega_from_mhz(p.cap_mhz > 0.0 ? p.cap_mhz : 0.5);
  return s;
}

ExperimentResult fig5(const ScenarioParams& p, bool panel_a) {
  ExperimentResult r;
  r.columns = {panel_a ? "gamma_R_khz" : "gamma_p_mhz", "fidelity",
               "duration_us"};
  meta_common(r, p);
  const std::vector<double> grid =
      panel_a ? std::vector<double>{0.0, 0.002, 0.004, 0.008}
              : std::vector<double>{0.0, 0.5, 1.0, 2.0};
  for (double rate : grid) {
    EnsembleGateSetup s = fig56_setup(p);
    s.family = PulseFamily::lr;
    s.gamma_R = (panel_a ? rate : 0.004) * p.gamma_scale;
    s.gamma_p = (panel_a ? 1.0 : rate) * p.gamma_scale;
    const auto c = ensemble_qubit_gate(s);
    r.rows.push_back(
        {format_double(panel_a ? khz_from_rate(s.gamma_R)
                               : mhz_from_rate(s.gamma_p)),
         format_double(average_gate_fidelity(c, fidelity_options(p))),
         format_double(c.schedule.total_duration())});
  }
  return r;
}

ExperimentResult fig6(const ScenarioParams& p, bool dissipation) {
  ExperimentResult r;
  r.columns = {"n", "eps", "fidelity", "duration_us"};
  meta_common(r, p);
  for (double n : grid_or(p.n, {0.0, 0.5, 1.0}))
    for (double eps : grid_or(p.eps, {-0.1, -0.05, 0.0, 0.05, 0.1})) {
      EnsembleGateSetup s = fig56_setup(p);
      s.family = PulseFamily::zss;
      s.n = n;
      s.eps = eps;
      if (dissipation) {
        s.gamma_R = 0.004 * p.gamma_scale;
        s.gamma_p = 1.0 * p.gamma_scale;
      }
      const auto c = ensemble_qubit_gate(s);
      r.rows.push_back(
          {format_double(n), format_double(eps),
           format_double(average_gate_fidelity(c, fidelity_options(p))),
           format_double(c.schedule.total_duration())});
    }
  return r;
}

TwoQubitSetup fig7_setup(const ScenarioParams& p, bool dissipation) {
  TwoQubitSetup s;
  s.n_atoms = p.n_atoms > 0 ? p.n_atoms : 4;
  s.omega1 = omega_from_mhz(6.0);  // peak cap of the control drive
  s.omega_c = w10;
  s.delta = 12.0 * w10;
  s.v = 0.9 * s.delta;
  if (dissipation) {
    s.gamma_r = s.gamma_R = 0.002 * p.gamma_scale;
    s.gamma_p = 2.0 * p.gamma_scale;
  }
  return s;
}

ExperimentResult fig7(const ScenarioParams& p, bool dissipation) {
  ExperimentResult r;
  r.columns = {"n", "eps", "fidelity", "duration_us"};
  meta_common(r, p);
  const double cap = omega_from_mhz(p.cap_mhz > 0.0 ? p.cap_mhz : 0.5);
  const auto n_grid =
      grid_or(p.n, dissipation ? std::vector<double>{1.0}
                               : std::vector<double>{0.0, 0.5, 1.0});
  for (double n : n_grid)
    for (double eps : grid_or(p.eps, {-0.1, 0.0, 0.1})) {
      TwoQubitSetup s = fig7_setup(p, dissipation);
      s.eps_c = s.eps_t = eps;
      const auto c = two_qubit_zss_gate(s, n, cap);
      r.rows.push_back(
          {format_double(n), format_double(eps),
           format_double(average_gate_fidelity(c, fidelity_options(p))),
           format_double(c.schedule.total_duration())});
    }
  return r;
}

TwoQubitSetup table1_setup(const ScenarioParams& p) {
  TwoQubitSetup s;
  s.n_atoms = p.n_atoms > 0 ? p.n_atoms : 4;
  s.omega1 = omega_from_mhz(6.0);
  s.omega_c = omega_from_mhz(140.0);
  s.delta = omega_from_mhz(2000.0);
  // C6 = 139 GHz um^6 at d = 3.5 um
  s.v = two_pi * 1e3 * 139.0 / std::pow(3.5, 6);
  s.gamma_r = s.gamma_R = 0.0044 * p.gamma_scale;
  s.gamma_p = 38.0 * p.gamma_scale;
  return s;
}

ExperimentResult table1(const ScenarioParams& p) {
  ExperimentResult r;
  r.columns = {"n", "duration_ns", "fidelity"};
  r.meta.emplace_back("caps_over_2pi_mhz", "6");
  r.meta.emplace_back("eps", format_double(std::isnan(p.eps) ? 0.1 : p.eps));
  meta_common(r, p);
  const double cap = omega_from_mhz(p.cap_mhz > 0.0 ? p.cap_mhz : 6.0);
  const double eps = std::isnan(p.eps) ? 0.1 : p.eps;
  for (double n : grid_or(
           p.n, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0})) {
    TwoQubitSetup s = table1_setup(p);
    s.eps_c = s.eps_t = eps;
    const auto c = two_qubit_zss_gate(s, n, cap);
    r.rows.push_back(
        {format_double(n),
         format_double(1e3 * c.schedule.total_duration()),
         format_double(average_gate_fidelity(c, fidelity_options(p)))});
  }
  return r;
}

ExperimentResult fig9(const ScenarioParams& p, bool panel_a) {
  ExperimentResult r;
  r.columns = {panel_a ? "gamma_p_mhz" : "gamma_ryd_khz", "fidelity",
               "duration_us"};
  meta_common(r, p);
  const std::vector<double> grid = panel_a
                                       ? std::vector<double>{1.0, 2.0}
                                       : std::vector<double>{0.004, 0.04};
  for (double rate : grid) {
    ToffoliSetup s;
    s.n_atoms = p.n_atoms > 0 ? p.n_atoms : 4;
    s.omega1 = w10;
    s.omega_b = w10;
    s.omega_c = w10;
    s.delta = 12.0 * w10;
    s.v = 2.0 * s.delta;
    s.gamma_p = (panel_a ? rate : 1.0) * p.gamma_scale;
    s.gamma_r = s.gamma_R = (panel_a ? 0.004 : rate) * p.gamma_scale;
    const auto prob = toffoli_problem(s);
    EvolveOptions opts;
    opts.dt_override = p.dt;
    const Matrix rho0 = prob.initial * prob.initial.adjoint();
    const auto res = run_schedule(prob.schedule, rho0, opts);
    r.rows.push_back(
        {format_double(panel_a ? rate : khz_from_rate(s.gamma_r)),
         format_double(state_fidelity(res.final_op, prob.target)),
         format_double(prob.schedule.total_duration())});
  }
  return r;
}

ExperimentResult fig10(const ScenarioParams& p) {
  ExperimentResult r;
  r.columns = {"gamma_khz", "fidelity", "duration_us"};
  meta_common(r, p);
  for (double gamma : {0.0, 0.004, 0.04, 0.4}) {
    DarkStateSetup s;
    s.omega1 = w10;
    s.v_prime = 20.0 * s.omega1;
    s.t_middle = 0.2121;
    s.gamma = gamma * p.gamma_scale;
    const auto c = dark_state_gate(s);
    r.rows.push_back(
        {format_double(khz_from_rate(s.gamma)),
         format_double(average_gate_fidelity(c, fidelity_options(p))),
         format_double(c.schedule.total_duration())});
  }
  return r;
}

ExperimentResult fig11(const ScenarioParams& p, bool panel_a) {
  ExperimentResult r;
  r.columns = {panel_a ? "gamma_p_mhz" : "gamma_ryd_khz", "fidelity",
               "duration_us"};
  meta_common(r, p);
  const std::vector<double> grid =
      panel_a ? std::vector<double>{0.5, 1.0, 2.0}
              : std::vector<double>{0.004, 0.04, 0.4};
  for (double rate : grid) {
    RoleExchangeSetup s;
    s.n_atoms = p.n_atoms > 0 ? p.n_atoms : 4;
    s.omega_a = w10;
    s.omega_c = w10;
    s.delta = 12.0 * w10;
    s.v = 2.0 * s.delta;
    s.gamma_p = (panel_a ? rate : 1.0) * p.gamma_scale;
    s.gamma_r = s.gamma_R = (panel_a ? 0.004 : rate) * p.gamma_scale;
    const auto c = role_exchange_gate(s);
    r.rows.push_back(
        {format_double(panel_a ? rate : khz_from_rate(s.gamma_r)),
         format_double(average_gate_fidelity(c, fidelity_options(p))),
         format_double(c.schedule.total_duration())});
  }
  return r;
}

ExperimentResult fig12(const ScenarioParams& p, bool panel_a) {
  ExperimentResult r;
  r.columns = {panel_a ? "gamma_phi_khz" : "gamma_ryd_khz", "regime",
               "fidelity", "duration_us"};
  meta_common(r, p);
  const std::vector<double> grid =
      panel_a ? std::vector<double>{0.0, 50.0, 100.0, 200.0}
              : std::vector<double>{0.0, 0.004, 0.04};
  for (double rate : grid)
    for (bool dispersive : {false, true}) {
      DispersiveSetup s;
      s.omega1 = w10;
      s.omega_b_prime = w10;
      s.delta_prime = 10.0 * s.omega_b_prime;
      s.v = 20.0 * s.delta_prime;
      s.dispersive = dispersive;
      s.gamma = (panel_a ? 0.004 : rate) * p.gamma_scale;
      s.gamma_phi =
          (panel_a ? rate_from_khz(rate) : 0.1) * p.gamma_scale;
      const auto c = dispersive_regime_gate(s);
      r.rows.push_back(
          {format_double(panel_a ? rate : khz_from_rate(s.gamma)),
           dispersive ? "dispersive" : "conventional",
           format_double(average_gate_fidelity(c, fidelity_options(p))),
           format_double(c.schedule.total_duration())});
    }
  return r;
}

double normal_sample(std::mt19937_64& gen) {
  // Box-Muller; fixed algorithm keeps scan output platform-stable
  const double u1 =
      1.0 - static_cast<double>(gen() >> 11) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

}  // namespace

ExperimentResult disorder_montecarlo(int samples, std::uint64_t seed,
                                     const ScenarioParams& p) {
  if (samples < 2)
    throw std::invalid_argument("disorder_montecarlo: need >= 2 samples");
  const double n = std::isnan(p.n) ? 0.7 : p.n;
  const double eps = std::isnan(p.eps) ? 0.1 : p.eps;
  const double cap = omega_from_mhz(p.cap_mhz > 0.0 ? p.cap_mhz : 6.0);
  const double mean_um = p.disorder_mean_um, sigma_um = p.disorder_sigma_um;
  const double min_um = 0.5;
  const double c6 = 139.0;

  TwoQubitSetup base = table1_setup(p);
  base.eps_c = base.eps_t = eps;

  std::mt19937_64 gen(seed);
  std::vector<std::vector<double>> shifts(samples);
  double v_sum = 0.0;
  for (int s = 0; s < samples; ++s) {
    InteractionParams ip;
    ip.c6 = c6;
    for (int l = 0; l < base.n_atoms; ++l) {
      double d = 0.0;
      do {
        d = mean_um + sigma_um * normal_sample(gen);
      } while (d < min_um);
      ip.distances.push_back(d);
    }
    shifts[s] = ip.per_atom_shifts(base.n_atoms);
    for (double v : shifts[s]) v_sum += mhz_from_omega(v);
  }

  std::vector<double> fids(samples);
  double duration = 0.0;
  for (int s = 0; s < samples; ++s) {
    TwoQubitSetup setup = base;
    setup.blockade_shifts = shifts[s];
    const auto c = two_qubit_zss_gate(setup, n, cap);
    fids[s] = average_gate_fidelity(c, fidelity_options(p));
    duration = c.schedule.total_duration();
  }
  double mean = 0.0;
  for (double f : fids) mean += f;
  mean /= samples;
  double var = 0.0;
  for (double f : fids) var += (f - mean) * (f - mean);
  var /= samples;

  ExperimentResult r;
  r.scenario = "fig8d";
  r.columns = {"n",        "eps",          "samples",
               "fidelity_mean", "fidelity_std", "duration_ns",
               "v_mean_mhz"};
  r.meta.emplace_back("distance_mean_um", format_double(mean_um));
  r.meta.emplace_back("distance_sigma_um", format_double(sigma_um));
  r.meta.emplace_back("c6_ghz_um6", format_double(c6));
  meta_common(r, p);
  r.rows.push_back({format_double(n), format_double(eps),
                    std::to_string(samples), format_double(mean),
                    format_double(std::sqrt(var)),
                    format_double(1e3 * duration),
                    format_double(v_sum / (samples * base.n_atoms))});
  return r;
}

const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> catalog = {
      {"fig3a", "control-atom gates vs Rydberg decay"},
      {"fig3b", "ensemble gates vs Rydberg decay"},
      {"fig3c", "ensemble gates vs intermediate-state decay"},
      {"fig3d", "ensemble NOT gate vs atom number"},
      {"fig4", "two-qubit gates, with and without dissipation"},
      {"fig5a", "invariant-based NOT gate vs Rydberg decay"},
      {"fig5b", "invariant-based NOT gate vs intermediate-state decay"},
      {"fig6a", "optimized ensemble NOT vs systematic error (no dissipation)"},
      {"fig6b", "optimized ensemble NOT vs systematic error (dissipative)"},
      {"fig7a", "optimized two-qubit CNOT vs error (no dissipation)"},
      {"fig7b", "optimized two-qubit CNOT vs error (dissipative)"},
      {"fig8d", "position-disorder Monte Carlo of the optimized CNOT"},
      {"fig9a", "Toffoli state fidelity vs intermediate-state decay"},
      {"fig9b", "Toffoli state fidelity vs Rydberg decay"},
      {"fig10", "dark-state two-qubit gate vs decay"},
      {"fig11a", "role-exchanged gate vs intermediate-state decay"},
      {"fig11b", "role-exchanged gate vs Rydberg decay"},
      {"fig12a", "dispersive vs conventional regime, dephasing scan"},
      {"fig12b", "dispersive vs conventional regime, decay scan"},
      {"table1", "optimized CNOT durations and fidelities vs n"},
  };
  return catalog;
}

ExperimentResult run_scenario(const std::string& id,
                              const ScenarioParams& params) {
  ExperimentResult r;
  if (id == "fig3a") r = fig3a(params);
  else if (id == "fig3b") r = fig3b(params);
  else if (id == "fig3c") r = fig3c(params);
  else if (id == "fig3d") r = fig3d(params);
  else if (id == "fig4") r = fig4(params);
  else if (id == "fig5a" || id == "fig5") r = fig5(params, id != "fig5b");
  else if (id == "fig5b") r = fig5(params, false);
  else if (id == "fig6a" || id == "fig6") r = fig6(params, false);
  else if (id == "fig6b") r = fig6(params, true);
  else if (id == "fig7a" || id == "fig7") r = fig7(params, false);
  else if (id == "fig7b") r = fig7(params, true);
  else if (id == "fig8d")
    r = disorder_montecarlo(params.samples > 0 ? params.samples : 4,
                            params.seed, params);
  else if (id == "fig9a" || id == "fig9") r = fig9(params, true);
  else if (id == "fig9b") r = fig9(params, false);
  else if (id == "fig10") r = fig10(params);
  else if (id == "fig11a" || id == "fig11") r = fig11(params, true);
  else if (id == "fig11b") r = fig11(params, false);
  else if (id == "fig12a" || id == "fig12") r = fig12(params, true);
  else if (id == "fig12b") r = fig12(params, false);
  else if (id == "table1") r = table1(params);
  else throw UnknownScenarioError("unknown scenario: " + id);
  r.scenario = id;
  return r;
}

}  // namespace mrae
