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

#include "qcskit/qcs.hpp"

#include <cstdint>

namespace qcskit {

/// A morphism of Qcs: a Hermitian matrix on the product carrier V (x) W,
/// read as a linear map H(V) -> H(W) through the fixed Choi convention
///
///   apply(F, c) = tr_V((c^T (x) I_W) F),
///
/// with the transpose taken in the computational basis. Under this
/// convention the Choi matrix of conjugation by Z is (I (x) Z) Omega
/// (I (x) Z)^dagger with Omega = sum_ij E_ij (x) E_ij, which is positive
/// semidefinite.
struct ChoiMorphism {
  HermMat choi;
  Index in_dim;
  Index out_dim;
  QcsDesc domain;
  QcsDesc codomain;
};

/// The same linear map in Hermitian-basis coordinates: a real out^2 x in^2
/// matrix, M(j,i) = <b_out_j, apply(F, b_in_i)>.
struct SuperopMatrix {
  RealMatrix coeffs;
  Index in_dim;
  Index out_dim;
};

HermMat choi_apply(const ChoiMorphism& F, const HermMat& c);

/// Choi morphism of rho -> Z rho Z^dagger for an m x n complex matrix Z.
/// Domain and codomain default to the canonical D sets on the carriers.
ChoiMorphism choi_of_conjugation(const Matrix& Z);
ChoiMorphism choi_of_conjugation(const Matrix& Z, QcsDesc domain, QcsDesc codomain);

ChoiMorphism identity_choi(Index n);

SuperopMatrix superop_of_choi(const ChoiMorphism& F);
ChoiMorphism choi_of_superop(const SuperopMatrix& M, QcsDesc domain, QcsDesc codomain);

/// Composition second after first, computed in superoperator coordinates.
/// Requires codomain(first) == domain(second) as descriptions.
ChoiMorphism compose_choi(const ChoiMorphism& second, const ChoiMorphism& first);

/// Monoidal product: the Choi of c1 (x) c2 -> apply(F1,c1) (x) apply(F2,c2),
/// built by interleaving the Kronecker product of the two Choi matrices.
ChoiMorphism tensor_choi(const ChoiMorphism& f1, const ChoiMorphism& f2);

struct HomAuditOptions {
  double tol = kDefaultTol;
  int tensor_budget = 48;
  /// Extra domain points probed before the random samples.
  std::vector<HermMat> probes;
};

/// Does F map its domain into its codomain? Generated domains are checked on
/// their generators (a necessary condition, and sufficient only for the hull
/// of the generators, not the full double polar; the report says which),
/// then on hull points and LP-confirmed members. Canonical and tensor
/// domains are sampled exactly.
AuditReport hom_membership_audit(const ChoiMorphism& F, int samples, std::uint64_t seed,
                                 const HomAuditOptions& opts = {});

}  // namespace qcskit
