// Copyright 2026 The Zermelo Authors
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

namespace zermelo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not match (different dimensions, non-square input).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operator or state failed its structural invariant (Hermiticity,
/// unitarity, normalization, orthogonality). `deviation` carries the
/// measured violation so callers can report it.
class InvariantError : public Error {
 public:
  InvariantError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

/// The minimum-time equation could not be solved.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_iterate, double residual)
      : Error(what), last_iterate_(last_iterate), residual_(residual) {}
  double last_iterate() const noexcept { return last_iterate_; }
  double residual() const noexcept { return residual_; }

 private:
  double last_iterate_;
  double residual_;
};

/// Initial and target rays coincide: no control is needed and the
/// orthonormalized target does not exist.
class DegenerateProblemError : public Error {
 public:
  using Error::Error;
};

/// A closed-form construction hit a vanishing denominator.
class SingularConstructionError : public Error {
 public:
  using Error::Error;
};

/// Fixed-step integration lost more norm than allowed.
class StepCountError : public Error {
 public:
  StepCountError(const std::string& what, double norm_drift)
      : Error(what), norm_drift_(norm_drift) {}
  double norm_drift() const noexcept { return norm_drift_; }

 private:
  double norm_drift_;
};

/// Scenario configuration could not be read or validated.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Output could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace zermelo
