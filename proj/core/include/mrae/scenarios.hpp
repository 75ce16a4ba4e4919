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

#pragma once

#include <string>
#include <vector>

#include "mrae/fidelity.hpp"
#include "mrae/model.hpp"

namespace mrae {

// {theta, phi} pairs of the holonomic single-qubit construction.
struct GateAngles {
  double theta;
  double phi;
  const char* name;
};
const std::vector<GateAngles>& universal_gate_set();  // NOT, Hadamard, Pi

// u(theta, phi) = [[cos t, -sin t e^{i p}], [-sin t e^{-i p}, -cos t]]
Matrix holonomic_single_qubit_gate(double theta, double phi);
// |0><0| (x) u + |1><1| (x) I
Matrix controlled_gate(const Matrix& u);

// --- single-qubit channels ---

// Resonant control atom, constant 2*pi-area drive.
ChannelSpec control_atom_gate(double theta, double phi, double omega1,
                              double gamma_r);

enum class PulseFamily { nhqc_constant, lr, zss };

struct EnsembleGateSetup {
  int n_atoms = 4;
  double omega_c = 0.0;  // rad/us
  double delta = 0.0;
  double vartheta = 0.0;
  double phi = 0.0;
  double gamma_p = 0.0, gamma_R = 0.0;
  PulseFamily family = PulseFamily::nhqc_constant;
  double n = 0.0;             // ZSS parameter
  double omega_eff_cap = 0.0; // peak of the effective coupling, rad/us
  double eps = 0.0;           // systematic Rabi error on the drive
  Frame frame = Frame::diagonal_detuning;
};
// Full N-atom model of one ensemble-qubit gate cycle.
ChannelSpec ensemble_qubit_gate(const EnsembleGateSetup& s);

// --- two-qubit channels ---

struct TwoQubitSetup {
  int n_atoms = 4;
  double omega1 = 0.0;   // control drive: constant amplitude or cap
  double omega_b = 0.0;  // ensemble component amplitude (plain NHQC)
  double omega_c = 0.0;
  double delta = 0.0;
  double vartheta = -two_pi / 4.0;  // -pi/2: controlled-NOT
  double phi = 0.0;
  double gamma_r = 0.0, gamma_R = 0.0, gamma_p = 0.0;
  double v = 0.0;                       // uniform blockade shift
  std::vector<double> blockade_shifts;  // per-atom override (disorder)
  double eps_c = 0.0, eps_t = 0.0;
};
// Three-step gate with constant pulses: control pi, ensemble 2*pi cycle,
// inverse control pi.
ChannelSpec two_qubit_nhqc_gate(const TwoQubitSetup& s);
// Optimized variant: ZSS half-cycle on the control, full ZSS cycle on the
// ensemble, exact inverse of the control half-cycle. omega1/omega_eff_cap
// are peak caps; cycle times come from them.
ChannelSpec two_qubit_zss_gate(const TwoQubitSetup& s, double n,
                               double omega_eff_cap);

// --- discussion-section variants ---

struct ToffoliSetup {
  int n_atoms = 4;
  double omega1 = 0.0;  // all control atoms
  double omega_b = 0.0, omega_c = 0.0, delta = 0.0;
  double vartheta = -two_pi / 4.0;
  double gamma_r = 0.0, gamma_R = 0.0, gamma_p = 0.0;
  double v = 0.0;  // control-ensemble and control-control blockade
};
struct StateFidelityProblem {
  GateSchedule schedule;
  Vector initial;
  Vector target;
};
// Two control atoms + ensemble, specified-input fidelity test.
StateFidelityProblem toffoli_problem(const ToffoliSetup& s);

// Ensemble as control (two-photon pi pulses on |Abar>), single atom as
// target; caption parameters of the role-exchange study.
struct RoleExchangeSetup {
  int n_atoms = 4;
  double omega_a = 0.0, omega_c = 0.0, delta = 0.0;
  double theta = -two_pi / 4.0, phi = 0.0;  // target-atom gate
  double gamma_r = 0.0, gamma_R = 0.0, gamma_p = 0.0;
  double v = 0.0;
};
ChannelSpec role_exchange_gate(const RoleExchangeSetup& s);

// Dark-state two-qubit gate: collective-level ensemble with the extra
// rbar level, exchange coupling V', adiabatic sine^2 drive envelope.
struct DarkStateSetup {
  double omega1 = 0.0;
  double vartheta = -two_pi / 4.0, phi = 0.0;
  double v_prime = 0.0;
  double t_middle = 0.0;  // sine^2 envelope duration
  double gamma = 0.0;     // gamma_r = gamma_R
};
ChannelSpec dark_state_gate(const DarkStateSetup& s);

// Dispersive vs conventional collective-level two-qubit gate.
struct DispersiveSetup {
  double omega1 = 0.0;
  double omega_b_prime = 0.0;  // two-photon Rabi of the B component
  double vartheta = -two_pi / 4.0, phi = 0.0;
  double delta_prime = 0.0;
  double v = 0.0;
  double gamma = 0.0;      // gamma_r = gamma_R
  double gamma_phi = 0.0;  // collective dephasing
  bool dispersive = true;  // false: resonant (conventional) regime
};
ChannelSpec dispersive_regime_gate(const DispersiveSetup& s);

}  // namespace mrae
