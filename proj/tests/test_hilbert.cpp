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

#include <doctest.h>

#include "mrae/hilbert.hpp"

using namespace mrae;

TEST_CASE("ensemble space dimensions follow 1 + 4N") {
  CHECK(ensemble_space(1).dim() == 5);
  CHECK(ensemble_space(4).dim() == 17);
  CHECK(ensemble_space(8).dim() == 33);
  CHECK_THROWS(ensemble_space(0));
}

TEST_CASE("ensemble basis ordering") {
  const auto s = ensemble_space(3);
  CHECK(s.labels[0] == "abar");
  CHECK(s.at("A1") == 1);
  CHECK(s.at("A3") == 3);
  CHECK(s.at("B1") == 4);
  CHECK(s.at("p1") == 7);
  CHECK(s.at("R3") == 12);
  CHECK_THROWS(s.at("Q1"));
}

TEST_CASE("control spaces") {
  CHECK(control_space().dim() == 3);
  CHECK(control_space_extended().dim() == 4);
  CHECK(control_space_extended().at("R") == 3);
}

TEST_CASE("tensor labels join with a dot") {
  const auto c = control_space().tensor(ensemble_space(1));
  CHECK(c.dim() == 15);
  CHECK(c.at("0.abar") == 0);
  CHECK(c.at("r.R1") == 2 * 5 + 4);
}

TEST_CASE("duplicate labels are rejected") {
  CHECK_THROWS(HilbertSpace::from_labels({"x", "x"}));
}

TEST_CASE("effective collective space") {
  const auto eff = ensemble_effective_space(true, true);
  CHECK(eff.dim() == 5);
  CHECK(eff.at("rbar") == 3);
  CHECK(ensemble_effective_space(false, false).dim() == 3);
}
