//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <stdexcept>
#include <string>

namespace slim {

struct SlimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was invoked on a cell that is not in a legal starting state.
struct PreconditionViolation : SlimError {
  using SlimError::SlimError;
};

// A program-with-verify loop exceeded its pulse budget.
struct VerifyFailure : SlimError {
  using SlimError::SlimError;
};

struct AddressOutOfBounds : SlimError {
  using SlimError::SlimError;
};

// A netlist level needs more cells than the array can serve in one cycle,
// or the netlist does not fit in the array at all.
struct CapacityExceeded : SlimError {
  using SlimError::SlimError;
};

struct ConfigError : SlimError {
  using SlimError::SlimError;
};

struct IoError : SlimError {
  using SlimError::SlimError;
};

}  // namespace slim
