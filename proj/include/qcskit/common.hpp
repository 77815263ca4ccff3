// Copyright 2026 The qcskit developers
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

#include <Eigen/Dense>

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace qcskit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Carriers above desk scale are rejected everywhere.
inline constexpr Index kMaxCarrierDim = 64;

/// Hermiticity tolerance applied when parsing or constructing from raw entries.
inline constexpr double kHermInputTol = 1e-12;

/// Tolerance used wherever an operation does not state its own.
inline constexpr double kDefaultTol = 1e-9;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched carrier dimensions or tensor factorizations.
struct DimensionError : Error {
  using Error::Error;
};

/// Structurally invalid input: non-Hermitian entries, degenerate pairing,
/// malformed files, violated preconditions.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace qcskit
