// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smt {

/// Malformed graph6 (or other textual) input. Carries the offending byte offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// Input outside the mathematical domain of an operation (empty graph, non-bipartite, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An exact search would exceed its budget. Never replaced by an approximation.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters (family parameters, tolerances, indices).
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Family parameters are valid but the canonical construction is not a member.
class NotConstructibleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An eigenvalue enclosure could not be tightened to the requested tolerance.
class InconclusiveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A size beyond what a format or routine supports.
class UnsupportedSizeError : public std::length_error {
public:
  using std::length_error::length_error;
};

} // namespace smt
