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
#include "qcskit/report.hpp"

#include <optional>
#include <string>

namespace qcskit {

/// Finite-dimensional commutative Frobenius algebra: structure constants
/// x_a x_b = sum_c mu(a,b,c) x_c, counit coordinates, and the unit element
/// (solved from the structure constants when not supplied). Semisimple
/// algebras in their idempotent basis carry the weights theta_i = eps(e_i).
///
/// `validate` must pass before generator matrices are requested.
class FrobeniusAlgebra {
 public:
  /// Empty placeholder; fails validation. Real algebras come from the
  /// factories below.
  FrobeniusAlgebra() = default;

  /// From raw structure constants and counit. The unit element is solved
  /// from mul(u, x_b) = x_b for all b; failure to solve rejects the input.
  static FrobeniusAlgebra from_structure(Index dim, std::vector<Complex> mu_flat, Vector counit);

  /// Orthogonal idempotent basis e_i e_j = delta_ij e_i with eps(e_i) =
  /// theta_i. Nondegenerate iff every theta_i is nonzero.
  static FrobeniusAlgebra semisimple(const RealVector& theta);

  Index dim() const { return dim_; }
  Complex mu(Index a, Index b, Index c) const { return mu_flat_[idx(a, b, c)]; }
  const Vector& unit() const { return unit_; }
  const Vector& counit() const { return counit_; }
  const std::optional<RealVector>& theta() const { return theta_; }

  /// eps(x_a x_b): complex symmetric by commutativity.
  Matrix pairing() const;

  /// Residual checks for commutativity, associativity, unit and counit laws,
  /// coassociativity, the Frobenius relation, and pairing nondegeneracy.
  /// Marks the algebra validated when everything passes. Also reports (but
  /// does not enforce) whether the pairing is positive definite, the
  /// unitarity flag.
  AuditReport validate(double tol = kDefaultTol) const;

  bool validated() const { return validated_; }

 private:
  std::size_t idx(Index a, Index b, Index c) const {
    return static_cast<std::size_t>((a * dim_ + b) * dim_ + c);
  }

  Index dim_ = 0;
  std::vector<Complex> mu_flat_;
  Vector unit_;
  Vector counit_;
  std::optional<RealVector> theta_;
  mutable bool validated_ = false;
};

enum class Generator { Cap, Cup, Mul, Comul, Id, Swap };

const char* generator_name(Generator g);

/// Euler characteristic contributed by each generator surface:
/// disks (cap/cup) +1, pants (mul/comul) -1, cylinders (id/swap) 0.
int generator_euler(Generator g);

/// The functor's value on a generating bordism: cap k x 1, cup 1 x k,
/// mul k x k^2, comul k^2 x k, id k x k, swap k^2 x k^2.
struct GeneratorMap {
  Generator name;
  Matrix matrix;
  int euler;
};

/// Requires a validated algebra. The comultiplication is the pairing-dual of
/// the multiplication: with W = pairing^{-1},
///   comul[(e,b)][c] = sum_a mu(c,a,e) W(a,b),
/// the unique coassociative counital partner by nondegeneracy.
GeneratorMap generator_matrix(const FrobeniusAlgebra& algebra, Generator name);

/// Genus-g closed surface invariant: the bordism composite
/// cap ; (comul ; mul)^g ; cup evaluated through the term language.
/// For semisimple algebras this equals sum_i theta_i^(1-g).
Complex closed_surface_invariant(const FrobeniusAlgebra& algebra, int genus);

}  // namespace qcskit
