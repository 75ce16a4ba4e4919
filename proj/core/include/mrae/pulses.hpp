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

#include <functional>
#include <utility>
#include <vector>

#include "mrae/operators.hpp"

namespace mrae {

using RealFn = std::function<double(double)>;

// Auxiliary angle functions Theta(t), gamma(t), alpha(t) of the dynamical
// invariant, with analytic derivatives, on t in [0, tau]. When
// half_time_flip is set, gamma and alpha (and their rates) are negated on
// the second half of the cycle, which flips the sign of Omega_R there and
// makes the dynamical phase cancel over the full cycle.
struct InvariantParams {
  double n = 0.0;   // optimization parameter of the ZSS family
  double tau = 1.0; // cycle duration, us
  double mu = 1.0;  // invariant scale, arbitrary
  bool half_time_flip = true;
  RealFn theta, dtheta, gamma, dgamma, alpha, dalpha;

  // flip-applied evaluations
  double alpha_at(double t) const;
  double dalpha_at(double t) const;
  double dgamma_at(double t) const;
};

// Theta = 2*pi*t/tau, gamma = 2*Theta, alpha = -2*sin(Theta)
InvariantParams lr_invariant_angles(double tau);
// Theta = 2*pi*t/tau, gamma = n*(2*Theta - sin(2*Theta)),
// alpha = -4n*sin^3(Theta)/3
InvariantParams zss_invariant_angles(double n, double tau);

// Drive quadratures of the effective two-level coupling,
// Omega_R = Omega_eff*cos(phi_B), Omega_I = -Omega_eff*sin(phi_B).
struct PulseSet {
  double tau = 0.0;
  RealFn omega_R, omega_I;

  double omega_eff(double t) const;
  double phi_B(double t) const;
};

struct TimedPulse {
  PulseSet pulse;
  double duration = 0.0;
};

// Constant drive closing a 2*pi (or given) pulse area; throws on a
// non-positive amplitude.
TimedPulse nhqc_constant_pulse(double omega_eff_max, double area = two_pi);

// Omega_R, Omega_I from the angle functions (invariant inverse engineering).
PulseSet lr_pulse_from_angles(const InvariantParams& ip);
// The zero-systematic-sensitivity family for given n and cycle time.
PulseSet zss_pulse(double n, double tau);
// Time-reversed, sign-flipped copy: Omega(s) = -Omega(duration - s). The
// resulting propagator is the exact inverse of the original pulse's.
PulseSet inverse_pulse(const PulseSet& p, double duration);
// Smooth envelope 4*pi/T * sin^2(pi t/T) with total area 2*pi, zero phase.
PulseSet adiabatic_sine2_pulse(double T);

double pulse_peak(const PulseSet& p, int samples = 8193);
// Cycle time such that max_t Omega_eff(t) equals the cap (bisection).
double zss_tau_for_cap(double n, double cap);
double lr_tau_for_cap(double cap);

// Systematic-error sensitivity q_s = |int_0^{tau/2} e^{-i gamma} dTheta
// sin^2(Theta) dt|^2, by composite-Simpson quadrature. Throws if the
// half-cycle boundary Theta(0)=0, Theta(tau/2)=pi is not met.
double qs_sensitivity(const InvariantParams& ip, long intervals = 20000);
// sin^2(n*pi)/(4 n^2) for the gamma = n*(2*Theta - sin 2*Theta) family.
double qs_closed_form(double n);

// Accumulated dynamical phase 0.5*int sin^2(Theta)*dgamma dt over the full
// cycle, with the half-time sign flip applied.
double dynamical_phase(const InvariantParams& ip, long intervals = 20000);
// Running integral, for inspection of the mid-cycle plateau.
std::vector<std::pair<double, double>> dynamical_phase_trace(
    const InvariantParams& ip, int samples = 501);

// Effective two-level Hamiltonian of the drive (basis {bright, Rydberg}).
Matrix effective_hamiltonian_2x2(const PulseSet& p, double t);
// Dynamical invariant I(t) and its +mu/2 eigenvector.
Matrix invariant_matrix(const InvariantParams& ip, double t);
Vector invariant_eigenvector_plus(const InvariantParams& ip, double t);

struct NhqcPlusReport {
  double cyclic_defect = 0.0;         // | |<nu1(0)|nu1(tau)>| - 1 |
  double von_neumann_residual = 0.0;  // max over grid
  double dynamical_phase_total = 0.0;
  bool cyclic_ok = false;
  bool von_neumann_ok = false;
  bool dynamical_phase_ok = false;
  bool all_ok() const {
    return cyclic_ok && von_neumann_ok && dynamical_phase_ok;
  }
};

// Numerical check of the three NHQC+ conditions on a uniform grid.
NhqcPlusReport verify_nhqc_plus_conditions(const InvariantParams& ip,
                                           const PulseSet& pulse,
                                           int grid = 1000);

// Piecewise waveforms of the three-step two-qubit protocol: control first
// half-cycle, full target cycle with the control laser off, then the exact
// inverse of the control half-cycle.
struct TwoQubitPulses {
  double n = 0.0;
  double tau_c = 0.0;
  double tau_t = 0.0;
  PulseSet control_first;   // on [0, tau_c/2]
  PulseSet target;          // on [0, tau_t], shifted to tau_c/2
  PulseSet control_second;  // on [0, tau_c/2], shifted to tau_c/2 + tau_t
  double total_duration() const { return tau_c + tau_t; }
};
TwoQubitPulses two_qubit_schedule(double n, double tau_c, double tau_t);

// Composite Simpson rule on [a, b] (intervals is rounded up to even).
double simpson(const RealFn& f, double a, double b, long intervals);
complexd simpson_complex(const std::function<complexd(double)>& f, double a,
                         double b, long intervals);

}  // namespace mrae
