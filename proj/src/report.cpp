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

#include "axc/report.hpp"

#include <ctime>

#include "axc/version.hpp"

namespace axc {

std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json inputs_to_json(const PhysicsInputs& in) {
  nlohmann::json j;
  j["m_a"] = in.background.mass.value;
  j["rho_DM"] = in.background.rho_dm.value;
  j["v_a"] = in.background.speed;
  j["theta"] = in.background.phase;
  j["Omega"] = in.detector.energy_gap.value;
  j["Omega_defaulted_to_resonance"] = in.omega_defaulted;
  j["T"] = in.detector.duration.value;
  j["R"] = in.detector.smearing_radius.value;
  j["lambda"] = in.detector.coupling.value;
  j["v_det"] = in.detector.velocity.norm();
  return j;
}

nlohmann::json make_run_record(const std::string& command, nlohmann::json inputs,
                               nlohmann::json outputs, nlohmann::json units) {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["outputs"] = std::move(outputs);
  j["units"] = std::move(units);
  j["version"] = kVersion;
  j["timestamp"] = iso_timestamp();
  return j;
}

}  // namespace axc
