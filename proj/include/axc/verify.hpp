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

#include <cstdint>
#include <string>
#include <vector>

namespace axc {

struct VerifyOptions {
  std::uint64_t seed = 20260808;
  std::size_t tuples = 1000;
  /// Mutation hook for sanity-checking the oracle itself: swaps the branch
  /// exponents of the closed form used as the reference, which must make the
  /// response suite fail loudly.
  bool fault_exponent_sign = false;
};

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // suppressed branches handled by the null bound
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string worst;
};

/// Runs the full oracle suite:
///   - closed-form response vs the defining-integral quadrature (randomized
///     grid over the design envelope, with a null bound for branches
///     suppressed below 1e-30 of their natural scale),
///   - the same comparison through the full kinematic construction
///     (moving detector, finite smearing),
///   - closed-form coherence vs the response-pair route,
///   - switching/smearing normalizations and the smearing Fourier factor
///     against direct numerical integration.
std::vector<SuiteResult> run_verification(const VerifyOptions& opts);

}  // namespace axc
