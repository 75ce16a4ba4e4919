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

#include <vector>

#include "mrae/dynamics.hpp"
#include "mrae/operators.hpp"

namespace mrae {

// Open-system channel against an ideal gate: the schedule realizes the
// physical evolution, `embedding` maps the d computational basis states
// into the simulation space (an isometry), `ideal` is the d x d target.
struct ChannelSpec {
  GateSchedule schedule;
  Matrix embedding;
  Matrix ideal;
};

struct FidelityOptions {
  int threads = 0;
  double dt_override = 0.0;
  // propagate operators through the master equation even without jumps
  bool force_master = false;
};

struct FidelityTrace {
  std::vector<double> times;
  std::vector<double> fidelity;
};

// Average gate fidelity by Pauli-basis propagation,
//   F = (sum_j tr[U U_j^dag U^dag eps(U_j)] + d^2) / (d^2 (d + 1)).
// Each Pauli string is embedded into the simulation space, pushed through
// the master equation (strings are Hermitian, so the evolution is run
// directly on the operator), and projected back onto the computational
// block; leaked population is simply lost in the projection. With no jump
// operators the channel is unitary and the d basis states are propagated
// as state vectors instead.
double average_gate_fidelity(const ChannelSpec& c,
                             const FidelityOptions& opts = {},
                             FidelityTrace* trace = nullptr);

// (|tr(U^dag V)|^2 + d) / (d^2 + d) for a strictly unitary channel V.
double unitary_channel_fidelity(const Matrix& ideal, const Matrix& actual);

// <target| rho |target>
double state_fidelity(const Matrix& rho, const Vector& target);

}  // namespace mrae
