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

#include "qcskit/common.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <vector>

namespace qcskit {

/// Hermitian matrix on an n-dimensional complex carrier, 1 <= n <= 64.
///
/// The set of these forms a real Hilbert space of dimension n^2 under the
/// pairing tr(fg); `basis_coords` / `herm_from_coords` move between the
/// matrix and its real coordinate vector in the fixed orthonormal basis
/// produced by `hermitian_basis`.
///
/// Values are immutable. Construction validates Hermiticity entrywise to
/// `tol` and then stores the exact symmetrization (f + f^dagger)/2, so all
/// downstream arithmetic sees an exactly Hermitian matrix.
class HermMat {
 public:
  explicit HermMat(Matrix entries, double tol = kHermInputTol);

  /// (m + m^dagger)/2 without a Hermiticity check. For results of arithmetic
  /// that are Hermitian up to roundoff.
  static HermMat symmetrized(const Matrix& m);

  Index dim() const { return mat_.rows(); }
  const Matrix& mat() const { return mat_; }
  Complex operator()(Index i, Index j) const { return mat_(i, j); }

  static HermMat zero(Index n) { return symmetrized(Matrix::Zero(n, n)); }
  static HermMat identity(Index n) { return symmetrized(Matrix::Identity(n, n)); }
  /// diag(d) for real d.
  static HermMat diagonal(const RealVector& d);
  /// Rank-one projector v v^dagger / |v|^2.
  static HermMat projector(const Vector& v);

  HermMat operator+(const HermMat& o) const;
  HermMat operator-(const HermMat& o) const;
  HermMat operator-() const;
  HermMat operator*(double s) const;

  bool approx_equal(const HermMat& o, double tol) const;

 private:
  struct Raw {};
  HermMat(Matrix m, Raw) : mat_(std::move(m)) {}
  Matrix mat_;
};

inline HermMat operator*(double s, const HermMat& f) { return f * s; }

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
struct Spectrum {
  RealVector eigenvalues;  // descending
  Matrix eigenvectors;     // orthonormal columns, matching order
};

/// The fixed orthonormal basis of H(V), dim n^2: diagonal units E_ii first,
/// then (E_ij + E_ji)/sqrt(2) for i < j row-major, then i(E_ij - E_ji)/sqrt(2)
/// in the same order. Coordinate vectors in this basis are reproducible
/// across runs.
std::vector<HermMat> hermitian_basis(Index n);

/// tr(fg). Real for Hermitian arguments; the imaginary part of the computed
/// trace is asserted below 1e-12.
double inner(const HermMat& f, const HermMat& g);

/// Real coordinates of f in the `hermitian_basis` ordering (length n^2).
RealVector basis_coords(const HermMat& f);

/// Inverse of `basis_coords`.
HermMat herm_from_coords(Index n, const RealVector& coords);

Spectrum spectral(const HermMat& f);

double op_norm(const HermMat& f);
double trace_of(const HermMat& f);
bool is_psd(const HermMat& f, double tol = kDefaultTol);
double min_eigenvalue(const HermMat& f);

/// Kronecker product, first factor outermost (row-major blocks).
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return Eigen::kroneckerProduct(a.derived(), b.derived()).eval();
}

HermMat kron(const HermMat& f, const HermMat& g);

/// Partial trace over factor `which` (1 or 2) of a matrix on a d1*d2 carrier.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> partial_trace(
    const Eigen::MatrixBase<Derived>& f, Index d1, Index d2, int which) {
  using Out = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (f.rows() != f.cols() || f.rows() != d1 * d2)
    throw DimensionError("partial_trace: carrier does not factor as d1*d2");
  if (which != 1 && which != 2) throw DimensionError("partial_trace: factor index must be 1 or 2");
  if (which == 2) {
    Out out = Out::Zero(d1, d1);
    for (Index i = 0; i < d1; ++i)
      for (Index j = 0; j < d1; ++j)
        for (Index k = 0; k < d2; ++k) out(i, j) += f(i * d2 + k, j * d2 + k);
    return out;
  }
  Out out = Out::Zero(d2, d2);
  for (Index k = 0; k < d2; ++k)
    for (Index l = 0; l < d2; ++l)
      for (Index i = 0; i < d1; ++i) out(k, l) += f(i * d2 + k, i * d2 + l);
  return out;
}

HermMat partial_trace(const HermMat& f, Index d1, Index d2, int which);

/// Conjugation by the permutation unitary reordering (A1 x B1) x (A2 x B2)
/// into (A1 x A2) x (B1 x B2). Preserves the spectrum.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> interleave_permute(
    const Eigen::MatrixBase<Derived>& f, Index a1, Index b1, Index a2, Index b2) {
  using Out = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Index n = a1 * b1 * a2 * b2;
  if (f.rows() != f.cols() || f.rows() != n)
    throw DimensionError("interleave_permute: carrier does not factor as a1*b1*a2*b2");
  std::vector<Index> perm(static_cast<std::size_t>(n));
  for (Index i1 = 0; i1 < a1; ++i1)
    for (Index j1 = 0; j1 < b1; ++j1)
      for (Index i2 = 0; i2 < a2; ++i2)
        for (Index j2 = 0; j2 < b2; ++j2) {
          const Index src = ((i1 * b1 + j1) * a2 + i2) * b2 + j2;
          const Index dst = ((i1 * a2 + i2) * b1 + j1) * b2 + j2;
          perm[static_cast<std::size_t>(src)] = dst;
        }
  Out out(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      out(perm[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(c)]) = f(r, c);
  return out;
}

HermMat interleave_permute(const HermMat& f, Index a1, Index b1, Index a2, Index b2);

}  // namespace qcskit
