// Copyright 2026 The axc Authors
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

// End-to-end tests that drive the installed binary: exit codes, output
// formats, configuration precedence and reproducibility. The fault-injection
// scenario at the bottom is the mutation sanity check for the verification
// oracle: a deliberately wrong closed form has to make `verify` exit nonzero.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args, bool merge_stderr = true) {
  std::string cmd = std::string(AXC_BINARY) + " " + args;
  if (merge_stderr) cmd += " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_path(const std::string& name) {
  return "/tmp/axc_test_" + std::to_string(getpid()) + "_" + name;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  REQUIRE(f.good());
  f << content;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_CASE("background defaults reproduce the headline numbers") {
  const auto r = run("background --json", false);
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j.contains("inputs"));
  CHECK(j.contains("outputs"));
  CHECK(j.contains("units"));
  CHECK(j.contains("version"));
  const double a_gev = j["outputs"]["amplitude_GeV"].get<double>();
  CHECK(std::abs(a_gev - 2e-6) / 2e-6 < 0.10);
  const double occ = j["outputs"]["occupation"].get<double>();
  CHECK(occ > 1e28);
  CHECK(occ < 4e28);
  // heavier axion: occupation of order one
  const auto heavy = run("background --json --m_a '10 eV'", false);
  REQUIRE(heavy.exit_code == 0);
  const double occ_heavy = json::parse(heavy.output)["outputs"]["occupation"];
  CHECK(occ_heavy > 0.1);
  CHECK(occ_heavy < 10.0);
}

TEST_CASE("malformed configuration exits 2 and names the key") {
  const std::string cfg = temp_path("bad.cfg");
  write_file(cfg, "# broken config\nm_a = \n");
  const auto r = run("background --config " + cfg);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("m_a") != std::string::npos);
  CHECK(r.output.find(":2") != std::string::npos);  // line diagnostic

  write_file(cfg, "no_such_key = 1\n");
  const auto unknown = run("background --config " + cfg);
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.output.find("no_such_key") != std::string::npos);

  const auto missing = run("background --config /nonexistent/axc.cfg");
  CHECK(missing.exit_code == 2);
  std::remove(cfg.c_str());
}

TEST_CASE("electron scenario and coupling scaling") {
  const auto r = run("coherence --electron --T '1 s' --gamma 1 --json", false);
  REQUIRE(r.exit_code == 0);
  const double c = json::parse(r.output)["outputs"]["electron_C"];
  CHECK(std::abs(c - 2.2e-6) / 2.2e-6 < 0.05);

  const auto r10 = run("coherence --electron --T '10 s' --gamma 1 --json", false);
  const double c10 = json::parse(r10.output)["outputs"]["electron_C"];
  CHECK(std::abs(c10 - 2.2e-5) / 2.2e-5 < 0.05);

  const auto zero = run("coherence --lambda 0 --json", false);
  REQUIRE(zero.exit_code == 0);
  CHECK(json::parse(zero.output)["outputs"]["C"].get<double>() == 0.0);

  // resonant defaults: the headline estimate per unit coupling
  const auto res = run("coherence --json", false);
  const double est = json::parse(res.output)["outputs"]["estimate"];
  CHECK(std::abs(est - 2.15e-3) / 2.15e-3 < 0.05);
}

TEST_CASE("perturbativity violation exits 3") {
  const auto r = run("coherence --lambda 1000");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("perturbative") != std::string::npos);
}

TEST_CASE("sweep validation exits 2") {
  CHECK(run("sweep --param phase --start 0 --stop 3 --points 1").exit_code == 2);
  CHECK(run("sweep --param phase --start 3 --stop 0 --points 5").exit_code == 2);
  CHECK(run("sweep --param phase --start 0 --stop 3 --points 5 --log").exit_code ==
        2);
  CHECK(run("sweep --param bogus --start 0 --stop 3 --points 5").exit_code == 2);
  CHECK(run("sweep --start 0 --stop 3 --points 5").exit_code == 2);  // missing param
}

TEST_CASE("energy-gap sweep peaks at the Doppler frequency") {
  // omega_tilde = 1 eV exactly (resting axion and detector), T = 10/eV
  const auto r = run(
      "sweep --param energy_gap --start '0.5 eV' --stop '1.5 eV' --points 41 "
      "--m_a '1 eV' --v_a 0 --T 10",
      false);
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 42);  // header + 41
  CHECK(rows[0][0] == "param");
  CHECK(rows[0][2] == "C");
  int best = -1;
  double best_c = -1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double c = std::stod(rows[i][2]);
    if (c > best_c) {
      best_c = c;
      best = static_cast<int>(i);
    }
  }
  const double om_best = std::stod(rows[static_cast<std::size_t>(best)][1]);
  CHECK(std::abs(om_best - 1.0) <= 0.025 + 1e-12);  // one grid step
}

TEST_CASE("phase sweep: maximum at 0, minimum at pi/2") {
  const auto r = run(
      "sweep --param phase --start 0 --stop 3.141592653589793 --points 9 "
      "--m_a '1 eV' --v_a 0 --Omega '1 eV' --T 1",
      false);
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 10);
  double c0 = std::stod(rows[1][2]);
  double c_quarter = std::stod(rows[5][2]);  // theta = pi/2
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double c = std::stod(rows[i][2]);
    CHECK(c <= c0 * (1.0 + 1e-12));
    CHECK(c >= c_quarter * (1.0 - 1e-12));
  }
  // theta = pi returns to the maximum
  CHECK(std::stod(rows[9][2]) == doctest::Approx(c0).epsilon(1e-12));
}

TEST_CASE("CSV output is byte-identical across runs") {
  const std::string args =
      "sweep --param duration --start 0.5 --stop 50 --points 24 --log "
      "--m_a '1 eV' --v_a 0 --Omega '1.05 eV'";
  const auto a = run(args, false);
  const auto b = run(args, false);
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("param,value,C,C_max,C_min,logC,omega_tilde,exponent_res,"
                      "exponent_off\n") == 0);
}

TEST_CASE("configuration precedence: defaults < file < flags") {
  const std::string cfg = temp_path("prec.cfg");
  write_file(cfg, "m_a = 2e-6 eV\nv_a = 1e-4\n");
  const auto from_file = run("background --json --config " + cfg, false);
  REQUIRE(from_file.exit_code == 0);
  CHECK(json::parse(from_file.output)["inputs"]["m_a"].get<double>() ==
        doctest::Approx(2e-6).epsilon(1e-14));

  const auto flag_wins =
      run("background --json --config " + cfg + " --m_a '3e-6 eV'", false);
  CHECK(json::parse(flag_wins.output)["inputs"]["m_a"].get<double>() ==
        doctest::Approx(3e-6).epsilon(1e-14));

  // env var provides the default path; --config overrides it
  const std::string cfg2 = temp_path("prec2.cfg");
  write_file(cfg2, "m_a = 5e-6 eV\n");
  {
    std::string cmd = "AXC_CONFIG=" + cfg + " " + AXC_BINARY +
                      " background --json 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    CHECK(json::parse(out)["inputs"]["m_a"].get<double>() ==
          doctest::Approx(2e-6).epsilon(1e-14));
  }
  {
    std::string cmd = "AXC_CONFIG=" + cfg + " " + AXC_BINARY +
                      " background --json --config " + cfg2 + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    CHECK(json::parse(out)["inputs"]["m_a"].get<double>() ==
          doctest::Approx(5e-6).epsilon(1e-14));
  }
  std::remove(cfg.c_str());
  std::remove(cfg2.c_str());
}

TEST_CASE("run records reproduce bit for bit") {
  const auto a = run("coherence --json --theta 0.37 --T '2 s'", false);
  const auto b = run("coherence --json --theta 0.37 --T '2 s'", false);
  REQUIRE(a.exit_code == 0);
  const json ja = json::parse(a.output);
  const json jb = json::parse(b.output);
  CHECK(ja["inputs"] == jb["inputs"]);
  CHECK(ja["outputs"] == jb["outputs"]);  // bit-identical numbers
  CHECK(ja["version"] == jb["version"]);
}

TEST_CASE("--out writes the report to a file") {
  const std::string out = temp_path("report.csv");
  const auto r = run("--out " + out +
                     " sweep --param phase --start 0 --stop 3 --points 4 "
                     "--m_a '1 eV' --v_a 0 --Omega '1 eV' --T 1");
  REQUIRE(r.exit_code == 0);
  std::ifstream f(out);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header.find("param,value,C") == 0);
  std::remove(out.c_str());
}

TEST_CASE("verify passes with independent seeds and fails under fault injection") {
  const auto r = run("verify --tuples 120");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("response-oracle") != std::string::npos);
  CHECK(r.output.find("coherence-identity") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);

  CHECK(run("verify --tuples 60 --seed 42").exit_code == 0);
  CHECK(run("verify --tuples 60 --seed 43").exit_code == 0);

  // mutation check: a sign-swapped closed form must be caught
  const auto fault = run("verify --tuples 40 --inject-fault-exponent-sign");
  CHECK(fault.exit_code == 1);
  CHECK(fault.output.find("FAIL") != std::string::npos);
  CHECK(fault.output.find("worst tuple") != std::string::npos);
}

TEST_CASE("sweep emits a JSON run record on request") {
  const auto r = run(
      "sweep --json --param phase --start 0 --stop 3 --points 4 "
      "--m_a '1 eV' --v_a 0 --Omega '1 eV' --T 1",
      false);
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["inputs"]["parameter"] == "phase");
  CHECK(j["outputs"]["rows"].size() == 4);
  CHECK(j["outputs"]["rows"][0].contains("C"));
  CHECK(j.contains("units"));
  CHECK(j.contains("version"));
}

TEST_CASE("unknown flags and missing subcommands exit 2") {
  CHECK(run("background --bogus-flag 1").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}
