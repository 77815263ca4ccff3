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
#include "qcskit/lp.hpp"
#include "qcskit/report.hpp"
#include "qcskit/sampling.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace qcskit {

/// Carrier-dimension cap for the LP-backed membership oracles (keeps the LPs
/// at no more than 64 coordinates).
inline constexpr Index kMaxOracleDim = 8;

/// Description of a quantum coherent space.
///
/// Membership semantics: CanonicalD = {f >= 0, op norm <= 1}; CanonicalP =
/// {f >= 0, tr <= 1}; Generated(S) = double polar of S; PolarOf(S) = polar of
/// S; TensorOf(C,D) = double polar of {c (x) d}; Unit = the interval [0,1] on
/// the one-dimensional carrier.
///
/// The norm in CanonicalD is the operator norm: mutual polarity with
/// CanonicalP forces it, via tr(fg) <= |f|_op tr(g).
class QcsDesc {
 public:
  enum class Variant { CanonicalD, CanonicalP, Generated, PolarOf, TensorOf, Unit };

  static QcsDesc canonical_d(Index n);
  static QcsDesc canonical_p(Index n);
  static QcsDesc generated(std::vector<HermMat> generators);
  static QcsDesc polar_of(std::vector<HermMat> generators);
  static QcsDesc tensor_of(QcsDesc left, QcsDesc right);
  static QcsDesc unit();

  Variant variant() const { return variant_; }
  Index carrier_dim() const { return carrier_; }
  const std::vector<HermMat>& generators() const;
  const QcsDesc& left() const;
  const QcsDesc& right() const;

  bool operator==(const QcsDesc& o) const;
  bool operator!=(const QcsDesc& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  QcsDesc(Variant v, Index carrier) : variant_(v), carrier_(carrier) {}
  Variant variant_;
  Index carrier_;
  std::vector<HermMat> generators_;
  std::shared_ptr<const QcsDesc> left_, right_;
};

struct MembershipVerdict {
  enum class Answer { In, Out, Unresolved };
  enum class Side { None, Below, Above };

  Answer answer = Answer::Unresolved;
  std::optional<HermMat> witness;  // Out: element of the polar side violating polarity with f
  Side side = Side::None;
  double pairing = 0.0;  // tr(f . witness) when a witness is present
  long iterations = 0;
  /// Set on tensor-membership In verdicts: the In is certified against the
  /// current finite outer approximation of the product polar.
  bool relative_to_outer_approx = false;

  bool in() const { return answer == Answer::In; }
  bool out() const { return answer == Answer::Out; }
};

/// 0 <= tr(fg) <= 1 up to tol.
bool is_polar_pair(const HermMat& f, const HermMat& g, double tol = kDefaultTol);

/// Is g polar to every element of S? Out verdicts carry the violating
/// generator as witness.
MembershipVerdict polar_membership(const HermMat& g, const std::vector<HermMat>& S,
                                   double tol = kDefaultTol);

/// Exact membership in the double polar of S, decided by two LPs over the
/// slab polyhedron {g : 0 <= tr(g s_i) <= 1}. Out verdicts carry a concrete
/// g in the polar of S whose pairing with f leaves [0,1].
MembershipVerdict bipolar_membership(const HermMat& f, const std::vector<HermMat>& S,
                                     double tol = kDefaultTol);

/// Membership in D(n) or P(n) by spectral test; Out verdicts carry the
/// polar_witness certificate.
MembershipVerdict canonical_membership(const HermMat& f, Canonical which,
                                       double tol = kDefaultTol);

/// For f outside the canonical set: an element of the opposite canonical set
/// pairing with f outside [0,1]. Throws if f is a member.
HermMat polar_witness(const HermMat& f, Canonical which, double tol = kDefaultTol);

struct TensorOptions {
  int budget = 48;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  int separation_restarts = 12;
};

/// Cutting-plane membership oracle for the tensor product of two QCSs
/// (canonical, finitely generated, or unit factors). In verdicts are flagged
/// `relative_to_outer_approx`; Out witnesses have an exactly reproducible
/// violation and survive the separation search over product elements.
MembershipVerdict tensor_membership(const HermMat& f, const QcsDesc& C, const QcsDesc& D,
                                    int budget, std::uint64_t seed = 0,
                                    double tol = kDefaultTol);

struct MembershipOptions {
  double tol = kDefaultTol;
  int tensor_budget = 48;
  std::uint64_t seed = 0;
};

/// Dispatch on the description variant.
MembershipVerdict qcs_membership(const HermMat& f, const QcsDesc& desc,
                                 const MembershipOptions& opts = {});

/// Seeded members of a described set. Canonical and Unit sets are sampled
/// exactly; Generated sets mix hull points of the generators with
/// LP-confirmed Gaussian draws; TensorOf mixes product members with scaled
/// convex combinations; PolarOf takes convex combinations of LP vertices of
/// the polar polyhedron.
std::vector<HermMat> sample_desc_members(const QcsDesc& desc, int count, Rng& rng);

/// Closure-operator laws of the polarity operator on a finite generating set:
/// extensivity, polar idempotence (sampled), [0,1]-scaling and convexity of
/// the double polar.
AuditReport qcs_axiom_suite(const std::vector<HermMat>& S, int samples, std::uint64_t seed,
                            double tol = kDefaultTol);

/// On the one-dimensional carrier: the ray of nonnegative reals fails the
/// double-polar fixed-point law while the interval [0,1] satisfies it. The
/// toolkit therefore uses [0,1] as the tensor unit.
AuditReport unit_object_audit();

}  // namespace qcskit
