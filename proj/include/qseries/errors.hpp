// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

/// A Pochhammer factor (or other denominator) landed within the pole
/// tolerance of zero. Samples that trigger this are rejected, not fatal.
struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// A summation hit max_terms before the stop rule fired.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Arguments outside an operation's contract (k out of [0,n], |q| >= 1, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A non-finite value appeared mid-computation.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Unknown identity id.
struct NotFoundError : std::invalid_argument {
    explicit NotFoundError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qseries
