// Copyright 2026 The qudicke Authors
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
/**
 * @file
 * Common scalar types, error types and numeric tolerances.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace qudicke {

using cplx = std::complex<double>;
using index_t = std::uint64_t;

/// Per-wire values of a computational basis state, wire 0 first.
using Digits = std::vector<std::size_t>;

inline constexpr double kPi = std::numbers::pi;

/// Raised when an argument violates a documented precondition or invariant.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Raised when projecting onto an outcome whose probability is zero.
class ImpossibleOutcome : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when a simulation would store more amplitudes than allowed.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace tol {
inline constexpr double amplitude = 1e-10;
inline constexpr double norm = 1e-12;
inline constexpr double fidelity = 1e-9;
inline constexpr double unitarity = 1e-10;
/// Projections with probability at or below this are reported impossible.
inline constexpr double impossible = 1e-24;
/// Sparse storage drops entries with squared magnitude below this.
inline constexpr double prune = 1e-32;
} // namespace tol

namespace detail {
inline void require(bool cond, const std::string &msg) {
    if (!cond) {
        throw DomainError(msg);
    }
}
} // namespace detail

} // namespace qudicke
