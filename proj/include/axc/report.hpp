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

#pragma once

#include <string>

#include <json.hpp>

#include "axc/config.hpp"

namespace axc {

/// Current time as an ISO-8601 UTC string.
std::string iso_timestamp();

/// Full parameter snapshot of a materialized run (natural units).
nlohmann::json inputs_to_json(const PhysicsInputs& in);

/// One record per run: inputs, outputs, units metadata, version, timestamp.
/// Re-evaluating the recorded inputs on the same build reproduces the
/// recorded outputs bit for bit.
nlohmann::json make_run_record(const std::string& command, nlohmann::json inputs,
                               nlohmann::json outputs, nlohmann::json units);

}  // namespace axc
