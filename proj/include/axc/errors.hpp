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

#include <stdexcept>
#include <string>

namespace axc {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Unit-algebra violation (e.g. adding quantities of different dimension).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Numeric input outside the valid domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An asymptotic formula was requested outside its regime of validity.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// The leading-order expansion parameter exceeded its hard limit.
class PerturbativityError : public Error {
 public:
  using Error::Error;
};

/// Numerical integration failed to meet the requested tolerance.
/// The message carries diagnostics (parameters, estimates, tolerances).
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration file, flag, or sweep specification.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace axc
