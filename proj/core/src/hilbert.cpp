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

#include "mrae/hilbert.hpp"

#include <stdexcept>

namespace mrae {

int HilbertSpace::at(const std::string& label) const {
  auto it = index.find(label);
  if (it == index.end())
    throw std::out_of_range("unknown basis label: " + label);
  return it->second;
}

HilbertSpace HilbertSpace::from_labels(std::vector<std::string> labels) {
  HilbertSpace s;
  s.labels = std::move(labels);
  for (size_t i = 0; i < s.labels.size(); ++i) {
    if (!s.index.emplace(s.labels[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate basis label: " + s.labels[i]);
  }
  return s;
}

HilbertSpace HilbertSpace::tensor(const HilbertSpace& other) const {
  std::vector<std::string> out;
  out.reserve(labels.size() * other.labels.size());
  for (const auto& a : labels)
    for (const auto& b : other.labels) out.push_back(a + "." + b);
  return from_labels(std::move(out));
}

HilbertSpace control_space() {
  return HilbertSpace::from_labels({"0", "1", "r"});
}

HilbertSpace control_space_extended() {
  return HilbertSpace::from_labels({"0", "1", "r", "R"});
}

HilbertSpace ensemble_space(int n_atoms) {
  if (n_atoms < 1) throw std::invalid_argument("ensemble_space: N < 1");
  std::vector<std::string> labels;
  labels.reserve(1 + 4 * n_atoms);
  labels.push_back("abar");
  for (const char* level : {"A", "B", "p", "R"})
    for (int l = 1; l <= n_atoms; ++l)
      labels.push_back(std::string(level) + std::to_string(l));
  return HilbertSpace::from_labels(std::move(labels));
}

HilbertSpace ensemble_effective_space(bool with_rbar, bool with_sink) {
  std::vector<std::string> labels = {"Abar", "Bbar", "Rbar"};
  if (with_rbar) labels.push_back("rbar");
  if (with_sink) labels.push_back("leak");
  return HilbertSpace::from_labels(std::move(labels));
}

}  // namespace mrae
