// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_CORE_ERRORS_HPP
#define MPFEEC_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpfeec {

/// Bad user input: malformed config, out-of-range parameters, shape mismatches.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Solver breakdown: singular factorization, divergence, CFL violation.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Inconsistent geometry: non-conforming interfaces, non-nested trace spaces,
/// degenerate Jacobians.
class GeometryError : public std::runtime_error {
public:
  explicit GeometryError(const std::string &msg) : std::runtime_error(msg) {}
};

/// A verified structural invariant failed at runtime.
class InvariantBreach : public std::runtime_error {
public:
  explicit InvariantBreach(const std::string &msg) : std::runtime_error(msg) {}
};

#define MPFEEC_REQUIRE(cond, msg)                                              \
  do {                                                                         \
    if (!(cond)) throw ::mpfeec::ValidationError(msg);                         \
  } while (0)

} // namespace mpfeec

#endif
