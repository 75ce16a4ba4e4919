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
#include <unordered_map>
#include <vector>

namespace mrae {

// Labeled basis of a (possibly composite) system. Composite labels join the
// factor labels with '.', control factor first.
struct HilbertSpace {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;

  int dim() const { return static_cast<int>(labels.size()); }
  // Throws std::out_of_range with the label name when unknown.
  int at(const std::string& label) const;
  bool has(const std::string& label) const { return index.count(label) > 0; }

  static HilbertSpace from_labels(std::vector<std::string> labels);
  HilbertSpace tensor(const HilbertSpace& other) const;
};

// Control atom {|0>, |1>, |r>}; extended adds the auxiliary Rydberg |R>.
HilbertSpace control_space();
HilbertSpace control_space_extended();

// Truncated N-atom ensemble in the single-excitation subspace:
// [abar, A1..AN, B1..BN, p1..pN, R1..RN], dim = 1 + 4N.
HilbertSpace ensemble_space(int n_atoms);

// Collective-level ensemble basis {Abar, Bbar, Rbar [, rbar]} plus a leak
// sink that absorbs spontaneous decay out of the symmetric subspace.
HilbertSpace ensemble_effective_space(bool with_rbar = false,
                                      bool with_sink = true);

}  // namespace mrae
