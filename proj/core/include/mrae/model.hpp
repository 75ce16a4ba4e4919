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

#include <optional>
#include <string>
#include <vector>

#include "mrae/hamiltonian.hpp"
#include "mrae/hilbert.hpp"
#include "mrae/operators.hpp"
#include "mrae/pulses.hpp"

namespace mrae {

// Rabi amplitudes and detunings in rad/us; decay rates in 1/us.
struct ControlAtomParams {
  double omega0 = 0.0, omega1 = 0.0;
  double phi0 = 0.0, phi1 = 0.0;
  double gamma_r = 0.0;

  double omega() const { return std::hypot(omega0, omega1); }
  // tan(theta/2) = omega0 / omega1
  double theta() const { return 2.0 * std::atan2(omega0, omega1); }
};

struct EnsembleParams {
  int n_atoms = 1;
  double omegaA = 0.0, omegaB = 0.0, omegaC = 0.0;
  double phiA = 0.0, phiB = 0.0;
  double delta = 0.0;        // one-photon detuning
  double delta_prime = 0.0;  // two-photon detuning of the dispersive variant
  double gamma_p = 0.0, gamma_R = 0.0;
  double gamma_phi = 0.0;  // collective dephasing

  double omega_prime() const { return std::hypot(omegaA, omegaB); }
  // tan(vartheta/2) = omegaA / omegaB
  double vartheta() const { return 2.0 * std::atan2(omegaA, omegaB); }
  double omega_eff() const {
    return omega_prime() * omegaC / (2.0 * delta);
  }
};

struct InteractionParams {
  double v = 0.0;        // uniform control-ensemble shift
  double v_prime = 0.0;  // collective exchange strength (dark-state variant)
  double c6 = 0.0;       // GHz um^6
  std::vector<double> distances;  // per-atom separations, um

  // v_l = 2*pi * 1e3 * c6 / d^6 (rad/us) when distances are given, else v.
  std::vector<double> per_atom_shifts(int n_atoms) const;
};

enum class Frame { phase_rotating, diagonal_detuning };
enum class InteractionKind { blockade_shift, darkstate_exchange };

// --- collective states (single-excitation subspace) ---

// Equal superposition with one atom promoted to `level` in {A, B, p, R}.
Vector collective_state(const HilbertSpace& space, const std::string& level);
// sin(vt/2) e^{i phi_ab} |Abar> + cos(vt/2) |Bbar>
Vector bright_state(const HilbertSpace& space, double vartheta,
                    double phi_ab);
// cos(vt/2) |Abar> - sin(vt/2) e^{-i phi_ab} |Bbar>
Vector dark_state(const HilbertSpace& space, double vartheta, double phi_ab);

// --- dense spec-level builders ---

// 3x3 on {|0>,|1>,|r>}, Eq. of the resonantly driven control atom.
Matrix control_hamiltonian(const ControlAtomParams& p);

// Full per-atom ensemble Hamiltonian at time t, with the laser-induced
// Stark shifts compensated by explicit counter-terms.
Matrix ensemble_hamiltonian_full(const EnsembleParams& p, Frame frame,
                                 double blockade_shift, double t);

// Collective two-level coupling (Omega_eff/2)|Bbar><Rbar| + h.c. on
// {Abar, Bbar, Rbar}; throws when delta == 0.
Matrix ensemble_hamiltonian_effective(const EnsembleParams& p);

// Rank-1 light shift -(omegaA^2+omegaB^2)/(4 delta_prime)|Bright><Bright| on
// {Abar, Bbar, Rbar}; omegaA/omegaB carry the two-photon (primed) Rabis.
// Requires delta_prime >= 5*max(|omegaA|, |omegaB|).
Matrix dispersive_effective_hamiltonian(const EnsembleParams& p);

// Dense interaction on ctrl (x) ens. blockade_shift wants the standard
// spaces; darkstate_exchange wants the extended control space and the
// collective space carrying rbar.
Matrix interaction_hamiltonian(const InteractionParams& ip,
                               InteractionKind kind,
                               const HilbertSpace& ctrl,
                               const HilbertSpace& ens);

// Jump operators for the given space: a bare control space, a bare ensemble
// space, or the composite (control labels joined first).
std::vector<JumpOp> lindblad_ops(const ControlAtomParams& cp,
                                 const EnsembleParams& ep,
                                 const HilbertSpace& space);

// --- term-level builders used by schedules ---

struct ControlEnvelopes {
  RealFn omega0, omega1, phi0, phi1;
  static ControlEnvelopes constant(const ControlAtomParams& p);
  // Drive |1><r| with amplitude omega_eff(t) and phase phi_B(t) of a
  // synthesized pulse (omega0 = 0).
  static ControlEnvelopes from_pulse(const PulseSet& p);
};

struct EnsembleEnvelopes {
  RealFn omegaA, omegaB, phiA, phiB;
  static EnsembleEnvelopes constant(const EnsembleParams& p);
  // Recover component envelopes from an effective-coupling pulse:
  // Omega' = 2*delta*Omega_eff/omegaC, split by vartheta; the geometric
  // phase rides on phi_B and the constant offset phi on phi_A.
  static EnsembleEnvelopes from_pulse(const PulseSet& p,
                                      const EnsembleParams& base,
                                      double vartheta, double phi);
};

std::vector<Term> control_drive_terms(const ControlEnvelopes& env,
                                      const HilbertSpace& ctrl);

struct EnsembleTermOptions {
  Frame frame = Frame::diagonal_detuning;
  double two_photon_shift = 0.0;  // scalar shift on every R_l
  bool stark_compensation = true;
};

std::vector<Term> ensemble_drive_terms(const EnsembleParams& base,
                                       const EnsembleEnvelopes& env,
                                       const EnsembleTermOptions& opt = {});

// Effective collective drive 0.5*amp(t) e^{i phase(t)} |Bright><Rbar| + h.c.
// (+ delta_prime on Rbar), on an ensemble_effective_space.
std::vector<Term> effective_drive_terms(const HilbertSpace& eff,
                                        double vartheta, double phi_ab,
                                        RealFn amplitude, RealFn phase,
                                        double delta_prime);

// Per-atom decay jumps from p and R to {A, B, a}, each at rate gamma_e/3.
std::vector<JumpOp> ensemble_decay_jumps(const EnsembleParams& ep);
// sqrt(gamma_r/2) |0><r| and |1><r| (per Rydberg level present).
std::vector<JumpOp> control_decay_jumps(double gamma_r,
                                        const HilbertSpace& ctrl);
// Collective-level decay gamma/3 from each listed Rydberg label to
// {Abar, Bbar, leak}.
std::vector<JumpOp> effective_decay_jumps(
    double gamma, const HilbertSpace& eff,
    const std::vector<std::string>& rydberg_labels);
// sqrt(gamma_phi) (I - 2 |Rbar><Rbar|)
JumpOp collective_dephasing_jump(double gamma_phi, const Vector& rbar);

// Lift a single-factor operator or term list into a tensor product space;
// dims lists every factor dimension, ops act on factor `which`.
SparseOp embed_factor(const SparseOp& op, const std::vector<int>& dims,
                      int which);
std::vector<Term> embed_terms(const std::vector<Term>& terms,
                              const std::vector<int>& dims, int which);
std::vector<JumpOp> embed_jumps(const std::vector<JumpOp>& jumps,
                                const std::vector<int>& dims, int which);

}  // namespace mrae
