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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string binary() {
  const char* bin = std::getenv("MRAESIM_BIN");
  REQUIRE(bin != nullptr);
  return bin;
}

int run(const std::string& args, const std::string& log = "/dev/null") {
  const std::string cmd = binary() + " " + args + " >" + log + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("mrae_cli_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("unknown scenario exits 3") {
  CHECK(run("run not_a_scenario") == 3);
}

TEST_CASE("bad flag exits 1 and names the key") {
  TempDir d;
  const auto log = (d.path / "log").string();
  CHECK(run("run fig3a --frobnicate 1", log) == 1);
  const std::string text = slurp(log);
  CHECK(text.find("frobnicate") != std::string::npos);
  CHECK(text.find("valid keys") != std::string::npos);
}

TEST_CASE("missing config file exits 1") {
  CHECK(run("run fig3a --config /nonexistent.ini") == 1);
}

TEST_CASE("invalid pulse family exits 1") {
  CHECK(run("pulse wavelet") == 1);
}

TEST_CASE("run writes csv and summary, byte-stable across reruns") {
  TempDir d;
  const std::string out1 = (d.path / "a").string();
  const std::string out2 = (d.path / "b").string();
  REQUIRE(run("run fig3a --out " + out1) == 0);
  REQUIRE(run("run fig3a --out " + out2) == 0);
  CHECK(slurp(out1 + "/fig3a.csv") == slurp(out2 + "/fig3a.csv"));
  const std::string summary = slurp(out1 + "/fig3a.summary.json");
  CHECK(summary.find("config_sha1") != std::string::npos);
  const std::string csv = slurp(out1 + "/fig3a.csv");
  CHECK(csv.find("\r\n") != std::string::npos);
}

TEST_CASE("dump-config round-trips") {
  TempDir d;
  const auto dump1 = (d.path / "c1.ini").string();
  const auto dump2 = (d.path / "c2.ini").string();
  REQUIRE(run("run fig3a --n 0.5 --seed 77 --dump-config", dump1) == 0);
  REQUIRE(run("run --config " + dump1 + " --dump-config", dump2) == 0);
  CHECK(slurp(dump1) == slurp(dump2));
}

TEST_CASE("config file drives a run") {
  TempDir d;
  std::ofstream((d.path / "cfg.ini"))
      << "[run]\nscenario=\"fig6a\"\nn=0.5\neps=0.05\ngamma-scale=0\n";
  const auto out = (d.path / "out").string();
  REQUIRE(run("run --config " + (d.path / "cfg.ini").string() + " --out " +
              out) == 0);
  const std::string csv = slurp(out + "/fig6a.csv");
  CHECK(csv.find("0.5,") != std::string::npos);
}

TEST_CASE("unknown config key exits 1") {
  TempDir d;
  std::ofstream((d.path / "cfg.ini"))
      << "[run]\nscenario=\"fig3a\"\nbogus_key=1\n";
  const auto log = (d.path / "log").string();
  CHECK(run("run --config " + (d.path / "cfg.ini").string(), log) == 1);
  CHECK(slurp(log).find("bogus_key") != std::string::npos);
}

TEST_CASE("pulse export caps and shapes") {
  TempDir d;
  const auto out = d.path.string();
  REQUIRE(run("pulse zss --n 1 --cap-mhz 0.5 --out " + out) == 0);
  const std::string csv = slurp(out + "/pulse_zss.csv");
  // last column is omega_eff/2pi in MHz; the peak must hit the cap
  double peak = 0.0;
  size_t rows = 0;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    const auto pos = line.rfind(',');
    peak = std::max(peak, std::stod(line.substr(pos + 1)));
    ++rows;
  }
  CHECK(rows == 2001);
  CHECK(peak == doctest::Approx(0.5).epsilon(1e-6));

  REQUIRE(run("pulse adiabatic --T 0.2121 --out " + out) == 0);
  const std::string acsv = slurp(out + "/pulse_adiabatic.csv");
  // midpoint amplitude is 4 pi / T -> (2/T) MHz units of omega/2pi
  std::istringstream alines(acsv);
  std::getline(alines, line);
  double apeak = 0.0;
  while (std::getline(alines, line)) {
    const auto pos = line.rfind(',');
    apeak = std::max(apeak, std::stod(line.substr(pos + 1)));
  }
  CHECK(apeak == doctest::Approx(2.0 / 0.2121).epsilon(1e-6));

  REQUIRE(run("pulse zss --n 0 --cap-mhz 0.5 --out " + out) == 0);
  const std::string zcsv = slurp(out + "/pulse_zss.csv");
  std::istringstream zlines(zcsv);
  std::getline(zlines, line);
  double zmin = 1e9, zmax = 0.0;
  while (std::getline(zlines, line)) {
    const auto pos = line.rfind(',');
    const double v = std::stod(line.substr(pos + 1));
    zmin = std::min(zmin, v);
    zmax = std::max(zmax, v);
  }
  CHECK(zmax - zmin < 1e-9);  // constant-amplitude limit
}
