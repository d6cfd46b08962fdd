// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace nabco {

/// Raised for malformed or inconsistent user input (bad rational strings,
/// invalid documents, preconditions a caller can check).  Maps to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a computation cannot proceed on valid input (singular matrix
/// where an inverse is required, internal consistency check failed).  Maps to
/// exit code 2.
class ComputeError : public std::runtime_error {
 public:
  explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nabco
