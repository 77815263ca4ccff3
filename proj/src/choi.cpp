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

#include "qcskit/choi.hpp"

#include <cmath>
#include <sstream>

namespace qcskit {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void check_choi_dims(const ChoiMorphism& F) {
  if (F.in_dim < 1 || F.out_dim < 1) throw DimensionError("ChoiMorphism: carrier dims must be >= 1");
  if (F.choi.dim() != F.in_dim * F.out_dim)
    throw DimensionError("ChoiMorphism: Choi matrix is not on the product carrier");
  if (F.domain.carrier_dim() != F.in_dim || F.codomain.carrier_dim() != F.out_dim)
    throw DimensionError("ChoiMorphism: domain or codomain carrier mismatch");
}

/// Complex coordinates of E_ij in the fixed Hermitian basis, applied through
/// a real superoperator: image = sum_l (M gamma)_l b_out_l.
Matrix apply_superop_to_unit(const SuperopMatrix& M, Index i, Index j) {
  const Index n = M.in_dim;
  const Index m = M.out_dim;
  Eigen::VectorXcd gamma = Eigen::VectorXcd::Zero(n * n);
  if (i == j) {
    gamma(i) = 1.0;
  } else {
    const Index lo = std::min(i, j), hi = std::max(i, j);
    const Index pair = lo * n - lo * (lo + 1) / 2 + (hi - lo - 1);
    const Index sym = n + pair;
    const Index anti = n + n * (n - 1) / 2 + pair;
    gamma(sym) = 1.0 / kSqrt2;
    gamma(anti) = (i < j) ? Complex(0.0, -1.0 / kSqrt2) : Complex(0.0, 1.0 / kSqrt2);
  }
  const Eigen::VectorXcd img = M.coeffs.cast<Complex>() * gamma;
  // Rebuild the output matrix from its (complex) basis coordinates.
  Matrix out = Matrix::Zero(m, m);
  Index k = 0;
  for (Index d = 0; d < m; ++d) out(d, d) += img(k++);
  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b) {
      out(a, b) += img(k) / kSqrt2;
      out(b, a) += img(k) / kSqrt2;
      ++k;
    }
  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b) {
      out(a, b) += img(k) * Complex(0.0, 1.0 / kSqrt2);
      out(b, a) += img(k) * Complex(0.0, -1.0 / kSqrt2);
      ++k;
    }
  return out;
}

}  // namespace

HermMat choi_apply(const ChoiMorphism& F, const HermMat& c) {
  check_choi_dims(F);
  if (c.dim() != F.in_dim) throw DimensionError("choi_apply: input is not on the in-carrier");
  const Matrix lifted = kron(c.mat().transpose().eval(), Matrix::Identity(F.out_dim, F.out_dim));
  const Matrix raw = partial_trace((lifted * F.choi.mat()).eval(), F.in_dim, F.out_dim, 1);
  const double herm_dev = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, F.choi.mat().norm() * c.mat().norm());
  if (herm_dev > 1e-12 * scale)
    throw ValidationError("choi_apply: image failed the Hermiticity assertion");
  return HermMat::symmetrized(raw);
}

ChoiMorphism choi_of_conjugation(const Matrix& Z) {
  return choi_of_conjugation(Z, QcsDesc::canonical_d(Z.cols()), QcsDesc::canonical_d(Z.rows()));
}

ChoiMorphism choi_of_conjugation(const Matrix& Z, QcsDesc domain, QcsDesc codomain) {
  const Index n = Z.cols();
  const Index m = Z.rows();
  if (n < 1 || m < 1) throw DimensionError("choi_of_conjugation: empty matrix");
  if (!Z.allFinite()) throw ValidationError("choi_of_conjugation: matrix has NaN or infinity");
  // Rank-one form: F = u u^dagger with u[(i,k)] = Z(k,i).
  Vector u(n * m);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < m; ++k) u(i * m + k) = Z(k, i);
  ChoiMorphism F{HermMat::symmetrized(u * u.adjoint()), n, m, std::move(domain),
                 std::move(codomain)};
  check_choi_dims(F);
  return F;
}

ChoiMorphism identity_choi(Index n) { return choi_of_conjugation(Matrix::Identity(n, n)); }

SuperopMatrix superop_of_choi(const ChoiMorphism& F) {
  check_choi_dims(F);
  const auto in_basis = hermitian_basis(F.in_dim);
  RealMatrix M(F.out_dim * F.out_dim, F.in_dim * F.in_dim);
  for (Index i = 0; i < static_cast<Index>(in_basis.size()); ++i) {
    // Coordinates in the orthonormal out-basis are exactly the inner
    // products M(j,i) = <b_out_j, apply(F, b_in_i)>.
    const HermMat img = choi_apply(F, in_basis[static_cast<std::size_t>(i)]);
    M.col(i) = basis_coords(img);
  }
  return SuperopMatrix{std::move(M), F.in_dim, F.out_dim};
}

ChoiMorphism choi_of_superop(const SuperopMatrix& M, QcsDesc domain, QcsDesc codomain) {
  const Index n = M.in_dim;
  const Index m = M.out_dim;
  if (M.coeffs.rows() != m * m || M.coeffs.cols() != n * n)
    throw DimensionError("choi_of_superop: coefficient shape mismatch");
  Matrix F = Matrix::Zero(n * m, n * m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Matrix unit = Matrix::Zero(n, n);
      unit(i, j) = 1.0;
      F += kron(unit, apply_superop_to_unit(M, i, j));
    }
  return ChoiMorphism{HermMat::symmetrized(F), n, m, std::move(domain), std::move(codomain)};
}

ChoiMorphism compose_choi(const ChoiMorphism& second, const ChoiMorphism& first) {
  check_choi_dims(second);
  check_choi_dims(first);
  if (first.out_dim != second.in_dim)
    throw DimensionError("compose_choi: carrier mismatch between the factors");
  if (first.codomain != second.domain)
    throw ValidationError("compose_choi: codomain of the first is not the domain of the second");
  const SuperopMatrix m1 = superop_of_choi(first);
  const SuperopMatrix m2 = superop_of_choi(second);
  SuperopMatrix prod{(m2.coeffs * m1.coeffs).eval(), first.in_dim, second.out_dim};
  return choi_of_superop(prod, first.domain, second.codomain);
}

ChoiMorphism tensor_choi(const ChoiMorphism& f1, const ChoiMorphism& f2) {
  check_choi_dims(f1);
  check_choi_dims(f2);
  const Index n = f1.in_dim * f2.in_dim;
  const Index m = f1.out_dim * f2.out_dim;
  if (n * m > kMaxCarrierDim)
    throw ValidationError("tensor_choi: product carrier exceeds supported size");
  const HermMat raw = kron(f1.choi, f2.choi);
  const HermMat F = interleave_permute(raw, f1.in_dim, f1.out_dim, f2.in_dim, f2.out_dim);
  return ChoiMorphism{F, n, m, QcsDesc::tensor_of(f1.domain, f2.domain),
                      QcsDesc::tensor_of(f1.codomain, f2.codomain)};
}

AuditReport hom_membership_audit(const ChoiMorphism& F, int samples, std::uint64_t seed,
                                 const HomAuditOptions& opts) {
  check_choi_dims(F);
  Rng rng(seed);
  AuditReport report{"hom-membership-audit", {}};
  MembershipOptions mopts;
  mopts.tol = opts.tol;
  mopts.tensor_budget = opts.tensor_budget;
  mopts.seed = seed;

  int unresolved = 0;
  const auto check_point = [&](Check& check, const HermMat& point, const std::string& what) {
    const HermMat image = choi_apply(F, point);
    const MembershipVerdict v = qcs_membership(image, F.codomain, mopts);
    if (v.answer == MembershipVerdict::Answer::Unresolved) {
      ++unresolved;
      return;
    }
    if (v.out() && check.pass) {
      check.fail(std::abs(v.pairing));
      check.witness = point;
      std::ostringstream os;
      os << what << ": image leaves " << F.codomain.to_string() << " (pairing " << v.pairing
         << " against the polar-side witness)";
      check.note(os.str());
    }
  };

  if (F.domain.variant() == QcsDesc::Variant::Generated) {
    Check gen{"generator-images"};
    for (const auto& s : F.domain.generators()) check_point(gen, s, "generator");
    gen.note("necessary condition; covers the hull of the generators, not the full double polar");
    report.add(gen);
  }

  Check sampled{"sampled-images"};
  for (const auto& probe : opts.probes) check_point(sampled, probe, "probe");
  const auto members = sample_desc_members(F.domain, samples, rng);
  for (const auto& c : members) {
    if (!sampled.pass) break;
    check_point(sampled, c, "sampled member");
  }
  std::ostringstream os;
  os << "checked " << opts.probes.size() << " probes and up to " << members.size()
     << " sampled domain members";
  sampled.note(os.str());
  if (F.domain.variant() == QcsDesc::Variant::Generated)
    sampled.note("samples cover hull points and LP-confirmed double-polar members");
  if (unresolved > 0)
    sampled.note("tensor codomain verdicts unresolved within budget: " +
                 std::to_string(unresolved));
  report.add(sampled);
  return report;
}

}  // namespace qcskit
