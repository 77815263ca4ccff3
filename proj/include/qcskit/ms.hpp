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

#include "qcskit/bord.hpp"
#include "qcskit/choi.hpp"

#include <map>

namespace qcskit {

/// Object assignment for a disjoint union of j circles over a k-dimensional
/// theory: either the categorical tensor of j copies of D(k), or the
/// canonical D on the full k^j product carrier. The two differ (the tensor
/// gap), so the choice is explicit.
enum class ObjectPolicy { TensorOfComponents, CanonicalDOfProduct };

/// A mixed-state TQFT obtained from a pure (1+1)-dimensional theory by
/// post-composing every generator conjugation into the canonical density
/// sets, twisted by lambda^chi.
struct MsTqft {
  FrobeniusAlgebra algebra;
  double lambda = 1.0;
  ObjectPolicy policy = ObjectPolicy::TensorOfComponents;
  std::map<Generator, ChoiMorphism> generator_chois;
};

/// The QCS assigned to j circles.
QcsDesc ms_object(Index algebra_dim, int circles, ObjectPolicy policy);

/// Constructs generator Choi morphisms choi_of_conjugation(lambda^chi(g) Z(g))
/// with domains and codomains per the policy. Performs no audits.
MsTqft build_ms(const FrobeniusAlgebra& algebra, double lambda, ObjectPolicy policy);

/// The functor's value on a whole term: conjugation by lambda^chi(term)
/// times the term's evaluation.
ChoiMorphism ms_image(const MsTqft& ms, const BordTerm& term);

/// One-variable feasibility of Euler rescaling: is there lambda > 0 with
/// |lambda^chi(g) Z(g)|_op <= 1 for every generator? Constraints on
/// t = log lambda: t <= -log|Z| for chi = +1 atoms, t >= log|Z| for
/// chi = -1 atoms, and |Z| <= 1 outright for chi = 0 atoms.
struct ScaleAudit {
  std::map<Generator, double> op_norms;
  bool feasible = false;
  double log_lo = 0.0, log_hi = 0.0;  // feasible interval in log lambda
  std::string clash;                  // the clashing constraint pair when infeasible
};

ScaleAudit scale_audit(const FrobeniusAlgebra& algebra);

/// Functor axioms on the Choi matrices: composition against a corpus of
/// composable term pairs, monoidality, identity, and preservation of every
/// Frobenius relation (whose Euler characteristics agree side by side, so
/// the lambda twist is consistent).
AuditReport functor_axiom_check(const MsTqft& ms, double tol = kDefaultTol);

/// hom_membership_audit over every generator Choi against its assigned
/// domain and codomain, with deterministic worst-state probes built from the
/// generators' singular vectors.
AuditReport qcs_morphism_audit(const MsTqft& ms, int samples, std::uint64_t seed);

/// Tracing an invertible one-dimensional Euler theory mu^chi out of the
/// product theory Z1 (x) Z2 lands exactly on the Euler rescaling of Z1 by
/// |mu|: the report verifies the Choi matrices agree to 1e-12 and reruns the
/// functor and morphism audits on the traced theory.
struct TraceOutResult {
  MsTqft theory;
  AuditReport report;
};

TraceOutResult trace_out_build(const FrobeniusAlgebra& a1, Complex mu, ObjectPolicy policy,
                               int samples = 64, std::uint64_t seed = 0);

/// The singlet projector lies in D(4) but not in D(2) (x) D(2): SWAP/2 pairs
/// into [0,1] with every product of D(2) members yet pairs to -1/2 with the
/// singlet. Demonstrates why the object policy matters.
AuditReport tensor_gap_demo(Index n, int samples = 200, std::uint64_t seed = 0);

}  // namespace qcskit
