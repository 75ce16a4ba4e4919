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

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrae/io.hpp"
#include "mrae/scenarios.hpp"

namespace mrae {

// Overrides applied on top of each scenario's published defaults; NaN / 0
// fields keep the default (grids collapse to a single point when set).
struct ScenarioParams {
  double n = std::nan("");
  double eps = std::nan("");
  int n_atoms = 0;
  double cap_mhz = 0.0;
  double gamma_scale = 1.0;  // multiplies every decay/dephasing rate
  double dt = 0.0;           // integrator step override, us
  int threads = 0;
  std::uint64_t seed = 12345;
  int samples = 0;                 // disorder sample count
  double disorder_mean_um = 3.5;   // distance distribution
  double disorder_sigma_um = 0.9;
};

struct ScenarioInfo {
  std::string id;
  std::string description;
};

const std::vector<ScenarioInfo>& scenario_catalog();

struct UnknownScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ExperimentResult run_scenario(const std::string& id,
                              const ScenarioParams& params = {});

// Position-disorder Monte Carlo: per-sample atom distances are normal
// (truncated at 0.5 um), blockade shifts follow C6/d^6, and the mean/std of
// the gate fidelity are reported. Deterministic for a fixed seed.
ExperimentResult disorder_montecarlo(int samples, std::uint64_t seed,
                                     const ScenarioParams& params = {});

}  // namespace mrae
