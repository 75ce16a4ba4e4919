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
#include <string>
#include <vector>

#include "mrae/operators.hpp"

namespace mrae {

// Which drive a term belongs to, for systematic-error scaling.
enum class Subsystem { fixed, control_drive, ensemble_drive };

using CoeffFn = std::function<complexd(double)>;

// One additive piece of a time-dependent Hamiltonian:
//   H += coeff(t) * op            (add_adjoint = false)
//   H += coeff(t) * op + h.c.     (add_adjoint = true)
// error_exponent is the power of (1 + eps) the coefficient picks up when a
// fractional Rabi error eps is injected on the term's subsystem (2 for the
// laser-induced Stark compensation terms which scale with the squared drive).
struct Term {
  SparseOp op;
  CoeffFn coeff;
  bool add_adjoint = false;
  int error_exponent = 0;
  Subsystem subsystem = Subsystem::fixed;
  // largest |d(arg coeff)/dt| when the coefficient oscillates (rotating
  // frames); informs the integrator step rule.
  double rate_hint = 0.0;
};

struct TimeDependentHamiltonian {
  int dim = 0;
  std::vector<Term> terms;

  Matrix dense(double t) const { return dense(t, 0.0, 0.0); }
  Matrix dense(double t, double eps_c, double eps_t) const;

  // Largest instantaneous coupling (2x the largest off-diagonal entry) and
  // largest diagonal/oscillation magnitude over the window, sampled.
  struct Scales {
    double omega_max = 0.0;
    double delta_max = 0.0;
  };
  Scales step_scales(double duration, int samples = 257) const;
};

// Static jump operator of the master equation (rates folded into op).
struct JumpOp {
  SparseOp op;
  std::string label;
};

}  // namespace mrae
