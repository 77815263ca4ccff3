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

#include "qcskit/herm.hpp"

#include <cstdint>
#include <random>

namespace qcskit {

using Rng = std::mt19937_64;

/// Gaussian N(0,1) coordinates in the fixed Hermitian basis.
HermMat sample_gaussian_herm(Index n, Rng& rng);

enum class Canonical { D, P };

/// Member of D(n) or P(n): a Gaussian Hermitian draw projected into the set
/// by eigenvalue clamping (D: clamp spectrum into [0,1]; P: clamp negatives
/// to zero, then divide by max(1, trace)).
HermMat sample_canonical_member(Index n, Canonical which, Rng& rng);

/// Deliberate non-member: cycles through a negative eigenvalue, and a norm
/// (for D) or trace (for P) violation, with a margin of at least 0.1.
HermMat sample_canonical_nonmember(Index n, Canonical which, Rng& rng);

Matrix sample_complex_gaussian(Index rows, Index cols, Rng& rng);

/// Haar-like unitary from the QR factorization of a complex Gaussian matrix.
Matrix sample_unitary(Index n, Rng& rng);

}  // namespace qcskit
