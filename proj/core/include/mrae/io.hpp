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
#include <utility>
#include <vector>

namespace mrae {

struct ExperimentResult {
  std::string scenario;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> meta;
};

// 17 significant digits, enough to round-trip a double exactly.
std::string format_double(double v);

// RFC 4180: CRLF line endings, fields quoted only when needed.
std::string to_csv(const ExperimentResult& r);
// Summary with scenario metadata and a content hash of the configuration.
std::string to_json_summary(const ExperimentResult& r);

void write_file(const std::string& path, const std::string& content);

}  // namespace mrae
