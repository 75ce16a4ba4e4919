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

#include "mrae/operators.hpp"

namespace mrae {

// Boundary units follow the paper's captions: Rabi frequencies and
// detunings are quoted as Omega/2pi in MHz, decay rates in kHz or MHz
// (plain inverse-time), durations in us. Internally everything is rad/us
// and 1/us.

constexpr double omega_from_mhz(double mhz) { return two_pi * mhz; }
constexpr double mhz_from_omega(double rad_per_us) {
  return rad_per_us / two_pi;
}

constexpr double rate_from_mhz(double mhz) { return mhz; }
constexpr double rate_from_khz(double khz) { return 1e-3 * khz; }
constexpr double khz_from_rate(double per_us) { return 1e3 * per_us; }
constexpr double mhz_from_rate(double per_us) { return per_us; }

}  // namespace mrae
