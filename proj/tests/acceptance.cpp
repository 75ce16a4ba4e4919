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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero when any criterion fails. A criterion name
// fragment on the command line restricts the run to matching criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mrae/experiments.hpp"
#include "mrae/parallel.hpp"
#include "mrae/units.hpp"

using namespace mrae;

namespace {

constexpr double pi = two_pi / 2.0;

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool approx(double value, double target, double tol, std::string& detail,
            const std::string& label) {
  const bool ok = std::abs(value - target) <= tol;
  detail += label + "=" + format_double(value) + (ok ? " ok " : " FAIL ");
  return ok;
}

bool at_least(double value, double floor, std::string& detail,
              const std::string& label) {
  const bool ok = value >= floor;
  detail += label + "=" + format_double(value) + (ok ? " ok " : " FAIL ");
  return ok;
}

// -- criterion 1: Table 1 regression ---------------------------------------

bool table1_regression(std::string& detail) {
  const std::vector<double> ns = {0.1, 0.2, 0.3, 0.4, 0.5,
                                  0.6, 0.7, 0.8, 0.9, 1.0};
  const std::vector<double> t_ns = {359.01, 426.88, 520.68, 628.93, 745.36,
                                    866.67, 991.07, 1117.5, 1245.4, 1374.4};
  const std::vector<double> f = {0.9641, 0.9662, 0.9685, 0.9730, 0.9782,
                                 0.9823, 0.9846, 0.9852, 0.9841, 0.9820};
  bool ok = true;
  double prev_t = 0.0;
  for (size_t k = 0; k < ns.size(); ++k) {
    ScenarioParams p;
    p.n = ns[k];
    const auto row = run_scenario("table1", p).rows.at(0);
    const double t = std::stod(row[1]);
    const double fid = std::stod(row[2]);
    const std::string tag = "n" + format_double(ns[k]).substr(0, 3);
    ok &= approx(t, t_ns[k], 0.01 * t_ns[k], detail, tag + ":T_ns");
    ok &= approx(fid, f[k], 0.004, detail, tag + ":F");
    ok &= t > prev_t;  // duration grows monotonically with n
    prev_t = t;
  }
  detail += "duration monotone in n ";
  return ok;
}

// -- criterion 2: ideal two-qubit CNOT -------------------------------------

bool ideal_cnot(std::string& detail) {
  bool ok = true;
  for (int n_atoms : {4, 8}) {
    TwoQubitSetup s;
    s.n_atoms = n_atoms;
    s.omega1 = omega_from_mhz(10.0);
    s.omega_b = omega_from_mhz(10.0);
    s.omega_c = s.omega_b;
    s.delta = 12.0 * s.omega_b;
    s.v = 2.0 * s.delta;
    const double f = average_gate_fidelity(two_qubit_nhqc_gate(s));
    ok &= approx(f, 0.9971, 0.003, detail,
                 "F(N=" + std::to_string(n_atoms) + ")");
  }
  return ok;
}

// -- criterion 3: single-control-atom gates --------------------------------

bool control_gates(std::string& detail) {
  bool ok = true;
  for (const auto& g : universal_gate_set()) {
    for (double gamma_r : {0.02, 0.04, 0.06}) {
      const double f = average_gate_fidelity(
          control_atom_gate(g.theta, g.phi, omega_from_mhz(10.0), gamma_r));
      ok &= at_least(f, 0.999, detail,
                     std::string(g.name) + "@" +
                         format_double(gamma_r).substr(0, 4));
    }
    const double f0 = average_gate_fidelity(
        control_atom_gate(g.theta, g.phi, omega_from_mhz(10.0), 0.0));
    ok &= at_least(f0, 0.9999, detail, std::string(g.name) + "@0");
  }
  return ok;
}

// -- criterion 4: robustness at 10% Rabi error ------------------------------
// Both abstract-derived floors carry the criterion's -0.0015 tolerance; the
// raw values are printed so the strict thresholds remain visible.

bool robustness(std::string& detail) {
  bool ok = true;
  for (double eps : {0.1, -0.1}) {
    EnsembleGateSetup s;
    s.n_atoms = 4;
    s.omega_c = omega_from_mhz(10.0);
    s.delta = 12.0 * s.omega_c;
    s.vartheta = -pi / 2.0;
    s.family = PulseFamily::zss;
    s.n = 1.0;
    s.omega_eff_cap = omega_from_mhz(0.5);
    s.eps = eps;
    const double f = average_gate_fidelity(ensemble_qubit_gate(s));
    ok &= at_least(f, 0.9998 - 0.0015, detail,
                   "NOT@eps=" + format_double(eps).substr(0, 4));
  }
  for (double eps : {0.1, -0.1}) {
    TwoQubitSetup s;
    s.n_atoms = 4;
    s.omega1 = omega_from_mhz(6.0);
    s.omega_c = omega_from_mhz(10.0);
    s.delta = 12.0 * s.omega_c;
    s.v = 0.9 * s.delta;
    s.eps_c = s.eps_t = eps;
    const double f =
        average_gate_fidelity(two_qubit_zss_gate(s, 1.0, omega_from_mhz(0.5)));
    ok &= at_least(f, 0.999 - 0.0015, detail,
                   "CNOT@eps=" + format_double(eps).substr(0, 4));
  }
  return ok;
}

// -- criterion 5: q_s property suite ----------------------------------------

bool qs_suite(std::string& detail) {
  bool ok = true;
  for (double n : {0.25, 0.5, 0.75, 1.0, 2.0}) {
    const double quad = qs_sensitivity(zss_invariant_angles(n, 2.0));
    ok &= approx(quad, qs_closed_form(n), 1e-8, detail,
                 "qs(" + format_double(n).substr(0, 4) + ")");
  }
  const double limit = qs_sensitivity(zss_invariant_angles(1e-4, 2.0));
  ok &= approx(limit, pi * pi / 4.0, 1e-4, detail, "qs(n->0)");
  return ok;
}

// -- criterion 6: dynamical-phase nulling -----------------------------------

bool dynamical_phase_nulling(std::string& detail) {
  bool ok = true;
  const auto lr_trace = dynamical_phase_trace(lr_invariant_angles(2.0), 401);
  ok &= approx(lr_trace[200].second, pi / 2.0, 1e-6, detail, "lr:half");
  ok &= approx(lr_trace.back().second, 0.0, 1e-6, detail, "lr:full");
  for (double n : {0.5, 1.0}) {
    const auto tr = dynamical_phase_trace(zss_invariant_angles(n, 2.0), 401);
    const std::string tag = "zss" + format_double(n).substr(0, 3);
    ok &= approx(tr[200].second, 3.0 * n * pi / 4.0, 1e-6, detail,
                 tag + ":half");
    ok &= approx(tr.back().second, 0.0, 1e-6, detail, tag + ":full");
  }
  return ok;
}

// -- criterion 7: invariant / NHQC+ condition suite -------------------------

bool invariant_suite(std::string& detail) {
  bool ok = true;
  for (double n : {0.0, 0.5, 1.0}) {
    const auto ip = zss_invariant_angles(n, 2.0);
    const auto pulse = zss_pulse(n, 2.0);
    const auto rep = verify_nhqc_plus_conditions(ip, pulse, 1000);
    const std::string tag = "n" + format_double(n).substr(0, 3);
    ok &= approx(rep.von_neumann_residual, 0.0, 1e-6, detail,
                 tag + ":vonNeumann");
    ok &= rep.cyclic_ok;
    ok &= approx(rep.dynamical_phase_total, 0.0, 1e-6, detail,
                 tag + ":dynPhase");

    // invariant commutation and Schroedinger residual on the same grid
    double commutation = 0.0, schroedinger = 0.0;
    const double tau = ip.tau;
    const auto gamma_acc = [&](double t) {
      return t <= 0.5 * tau ? ip.gamma(t)
                            : 2.0 * ip.gamma(0.5 * tau) - ip.gamma(t);
    };
    for (int k = 0; k < 1000; ++k) {
      const double t = tau * (k + 0.5) / 1000;
      const double th = ip.theta(t), dth = ip.dtheta(t);
      const double a = ip.alpha_at(t), da = ip.dalpha_at(t);
      Matrix di(2, 2);
      di << -std::sin(th) * dth,
          std::exp(-ii * a) * (std::cos(th) * dth - ii * da * std::sin(th)),
          std::exp(ii * a) * (std::cos(th) * dth + ii * da * std::sin(th)),
          std::sin(th) * dth;
      di *= 0.5;
      const Matrix h = effective_hamiltonian_2x2(pulse, t);
      commutation = std::max(
          commutation,
          max_abs(Matrix(di + ii * commutator(h, invariant_matrix(ip, t)))));

      const double dg = ip.dgamma_at(t);
      const complexd phase = std::exp(-0.5 * ii * gamma_acc(t));
      const Vector psi = phase * invariant_eigenvector_plus(ip, t);
      Vector dpsi(2);
      dpsi << phase * std::exp(-0.5 * ii * a) *
                  (-0.5 * dth * std::sin(0.5 * th) -
                   0.5 * ii * (da + dg) * std::cos(0.5 * th)),
          phase * std::exp(0.5 * ii * a) *
              (0.5 * dth * std::cos(0.5 * th) +
               0.5 * ii * (da - dg) * std::sin(0.5 * th));
      schroedinger = std::max(
          schroedinger, (ii * dpsi - h * psi).cwiseAbs().maxCoeff());
    }
    ok &= approx(commutation, 0.0, 1e-6, detail, tag + ":commutation");
    ok &= approx(schroedinger, 0.0, 1e-6, detail, tag + ":schroedinger");
  }
  return ok;
}

// -- criterion 8: effective vs full model, frame equivalence ----------------

bool effective_vs_full(std::string& detail) {
  bool ok = true;
  EnsembleParams p;
  p.n_atoms = 1;
  p.omegaC = omega_from_mhz(10.0);
  p.delta = 12.0 * p.omegaC;
  p.omegaB = p.omegaC / std::sqrt(2.0);
  p.omegaA = -p.omegaB;  // vartheta = -pi/2

  const auto space = ensemble_space(1);
  TimeDependentHamiltonian ham;
  ham.dim = space.dim();
  ham.terms = ensemble_drive_terms(p, EnsembleEnvelopes::constant(p), {});
  const double T = two_pi / p.omega_eff();
  const double dt = default_step(ham, T);

  const Vector bright = bright_state(space, p.vartheta(), 0.0);
  const Vector ryd = collective_state(space, "R");
  Matrix u_full(2, 2);
  for (int col = 0; col < 2; ++col) {
    const Vector out = evolve_state(col == 0 ? bright : ryd, ham, T, dt);
    u_full(0, col) = bright.dot(out);
    u_full(1, col) = ryd.dot(out);
  }
  Matrix h_eff(2, 2);
  h_eff << 0.0, 0.5 * p.omega_eff(), 0.5 * p.omega_eff(), 0.0;
  const Matrix u_eff = hermitian_propagator(h_eff, T);
  ok &= approx(trace_distance(u_full, u_eff), 0.0, 0.02, detail,
               "propagator_distance");

  // frame equivalence on populations
  const Matrix rho0 = Matrix(bright * bright.adjoint());
  Matrix pops[2];
  int k = 0;
  for (Frame f : {Frame::diagonal_detuning, Frame::phase_rotating}) {
    EnsembleTermOptions opt;
    opt.frame = f;
    TimeDependentHamiltonian hf;
    hf.dim = space.dim();
    hf.terms = ensemble_drive_terms(p, EnsembleEnvelopes::constant(p), opt);
    pops[k++] =
        evolve_master(rho0, hf, {}, T, 2e-5).final_op.diagonal().real();
  }
  ok &= approx(max_abs(Matrix(pops[0] - pops[1])), 0.0, 1e-6, detail,
               "frame_population_gap");
  return ok;
}

// -- criterion 9: dispersive vs conventional regime --------------------------

bool dispersive_comparison(std::string& detail) {
  double f_regime[2];
  for (bool dispersive : {false, true}) {
    DispersiveSetup s;
    s.omega1 = omega_from_mhz(10.0);
    s.omega_b_prime = omega_from_mhz(10.0);
    s.delta_prime = 10.0 * s.omega_b_prime;
    s.v = 20.0 * s.delta_prime;
    s.dispersive = dispersive;
    s.gamma = 0.004;
    s.gamma_phi = rate_from_khz(100.0);
    f_regime[dispersive ? 1 : 0] =
        average_gate_fidelity(dispersive_regime_gate(s));
  }
  detail += "conventional=" + format_double(f_regime[0]) +
            " dispersive=" + format_double(f_regime[1]) + " ";
  return f_regime[1] > f_regime[0];
}

// -- criterion 10: determinism ----------------------------------------------

bool determinism(std::string& detail) {
  bool ok = true;
  const auto a = run_scenario("fig3a");
  const auto b = run_scenario("fig3a");
  ok &= to_csv(a) == to_csv(b);
  detail += std::string("fig3a csv ") + (ok ? "identical " : "DIFFERS ");

  ScenarioParams mc;
  mc.n = 0.1;
  mc.gamma_scale = 0.0;
  mc.dt = 2e-5;
  const auto m1 = disorder_montecarlo(3, 99, mc);
  const auto m2 = disorder_montecarlo(3, 99, mc);
  const bool same = to_csv(m1) == to_csv(m2);
  ok &= same;
  detail += std::string("fig8d csv ") + (same ? "identical " : "DIFFERS ");
  return ok;
}

// -- property P1: Toffoli state fidelity -------------------------------------

bool toffoli_property(std::string& detail) {
  double fids[2];
  int k = 0;
  for (double gamma_p : {1.0, 2.0}) {
    ToffoliSetup s;
    s.n_atoms = 4;
    s.omega1 = omega_from_mhz(10.0);
    s.omega_b = s.omega1;
    s.omega_c = s.omega1;
    s.delta = 12.0 * s.omega1;
    s.v = 2.0 * s.delta;
    s.gamma_p = gamma_p;
    s.gamma_r = s.gamma_R = 0.004;
    const auto prob = toffoli_problem(s);
    const auto res = run_schedule(
        prob.schedule, Matrix(prob.initial * prob.initial.adjoint()));
    fids[k++] = state_fidelity(res.final_op, prob.target);
  }
  bool ok = true;
  ok &= at_least(fids[0], 0.98, detail, "F@caption");
  ok &= fids[1] < fids[0];
  detail += "monotone in gamma_p ";
  return ok;
}

// -- property P2: role exchange ----------------------------------------------

bool role_exchange_property(std::string& detail) {
  double fids[2];
  int k = 0;
  for (double gamma_ryd : {0.004, 0.4}) {
    RoleExchangeSetup s;
    s.n_atoms = 4;
    s.omega_a = omega_from_mhz(10.0);
    s.omega_c = s.omega_a;
    s.delta = 12.0 * s.omega_a;
    s.v = 2.0 * s.delta;
    s.gamma_p = 1.0;
    s.gamma_r = s.gamma_R = gamma_ryd;
    fids[k++] = average_gate_fidelity(role_exchange_gate(s));
  }
  bool ok = true;
  ok &= at_least(fids[0], 0.98, detail, "F@caption");
  ok &= fids[1] < fids[0];
  detail += "monotone in gamma_ryd ";
  return ok;
}

// -- property P3: ensemble-size trend -----------------------------------------

bool atom_number_trend(std::string& detail) {
  double f2 = 0.0, f10 = 0.0;
  for (int n_atoms : {2, 10}) {
    EnsembleGateSetup s;
    s.n_atoms = n_atoms;
    s.omega_c = omega_from_mhz(10.0);
    s.delta = 12.0 * s.omega_c;
    s.vartheta = -pi / 2.0;
    s.family = PulseFamily::nhqc_constant;
    s.omega_eff_cap =
        std::sqrt(2.0) * omega_from_mhz(10.0) * s.omega_c / (2.0 * s.delta);
    s.gamma_p = 1.0;
    s.gamma_R = 0.004;
    (n_atoms == 2 ? f2 : f10) = average_gate_fidelity(ensemble_qubit_gate(s));
  }
  detail += "F(N=2)=" + format_double(f2) + " F(N=10)=" + format_double(f10) +
            " ";
  return std::abs(f2 - f10) < 0.005;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string filter = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {"1 table1 durations and fidelities", table1_regression},
      {"2 ideal two-qubit CNOT 0.9971", ideal_cnot},
      {"3 control-atom gates vs gamma_r", control_gates},
      {"4 robustness at 10% Rabi error", robustness},
      {"5 q_s quadrature vs closed form", qs_suite},
      {"6 dynamical-phase nulling", dynamical_phase_nulling},
      {"7 invariant and NHQC+ residuals", invariant_suite},
      {"8 effective-vs-full and frame equivalence", effective_vs_full},
      {"9 dispersive beats conventional under dephasing",
       dispersive_comparison},
      {"10 deterministic outputs", determinism},
      {"P1 Toffoli state fidelity", toffoli_property},
      {"P2 role-exchanged gate", role_exchange_property},
      {"P3 fidelity flat in ensemble size", atom_number_trend},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    if (!filter.empty() && c.name.find(filter) == std::string::npos) continue;
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail += std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %s: %s\n", pass ? "PASS" : "FAIL",
                c.name.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += pass ? 0 : 1;
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
