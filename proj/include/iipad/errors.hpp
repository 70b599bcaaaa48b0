// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IIPAD_ERRORS_HPP
#define IIPAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iipad {

// Error taxonomy used across the library.  The CLI maps these onto process
// exit codes, so which type gets thrown is part of the contract:
//
//   InvalidArgument -> exit 2 (caller misuse: bad flag value, bad shape)
//   DataError       -> exit 3 (unreadable/malformed/insufficient input data)
//   NumericError    -> exit 4 (diverged training, non-finite values)
//
// InvalidState covers consume-before-prepare bugs (e.g. scoring with an
// untrained model); it also exits 2 since it is a usage problem.

class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

class InvalidState : public std::logic_error {
 public:
  explicit InvalidState(const std::string& what) : std::logic_error(what) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace iipad

#endif  // IIPAD_ERRORS_HPP
