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
#include <stdexcept>
#include <string>
#include <vector>

#include "mrae/hamiltonian.hpp"
#include "mrae/pulses.hpp"

namespace mrae {

struct DisorderSpec {
  double mean_um = 3.5;
  double sigma_um = 0.9;
  int samples = 0;
};

// Fractional systematic Rabi errors on the control and ensemble drives.
struct ErrorModel {
  double epsilon_c = 0.0;
  double epsilon_t = 0.0;
  std::optional<DisorderSpec> disorder;
};

struct Segment {
  TimeDependentHamiltonian ham;
  double duration = 0.0;
  std::string label;
};

struct GateSchedule {
  int dim = 0;
  std::vector<Segment> segments;
  std::vector<JumpOp> jumps;
  ErrorModel errors;

  double total_duration() const;
};

struct EvolveOptions {
  double dt_override = 0.0;
  int max_samples = 2000;
  // record tr(O * X) at the sample times, one trace per observable
  std::vector<Matrix> observables;
  bool check_trace = true;
  double trace_tol = 1e-5;
};

struct EvolutionResult {
  Matrix final_op;
  std::vector<double> sample_times;
  std::vector<complexd> trace_samples;
  std::vector<std::vector<complexd>> observable_traces;
  long steps = 0;
  double wall_seconds = 0.0;
};

// Raised when the integrator detects trace drift beyond tolerance.
struct IntegrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dt = min(0.002/Omega_max, 0.02/Delta_max) from the sampled instantaneous
// coupling and diagonal/oscillation magnitudes, clamped to the duration.
double default_step(const TimeDependentHamiltonian& ham, double duration);

// Fixed-step RK4 for d rho/dt = -i[H, rho] + sum_j D[L_j] rho. The initial
// operator need not be Hermitian or positive; the generator is applied by
// linearity (Pauli-basis propagation relies on this). The last partial step
// is shortened so the grid lands exactly on `duration`.
EvolutionResult evolve_master(const Matrix& rho0,
                              const TimeDependentHamiltonian& ham,
                              const std::vector<JumpOp>& jumps,
                              double duration, double dt,
                              const EvolveOptions& opts = {});

// Schroedinger propagation of a pure state (no jumps).
Vector evolve_state(const Vector& psi0, const TimeDependentHamiltonian& ham,
                    double duration, double dt);

// Sequential evolution through the schedule segments, applying the error
// model's (1 + eps)^k scaling to the drive terms.
EvolutionResult run_schedule(const GateSchedule& s, const Matrix& rho0,
                             const EvolveOptions& opts = {});
// State-vector variant; requires an empty jump list.
Vector run_schedule_state(const GateSchedule& s, const Vector& psi0,
                          double dt_override = 0.0);

// Amplitude-scaled copy of a pulse; phases untouched.
PulseSet inject_systematic_error(const PulseSet& p, double eps);

}  // namespace mrae
