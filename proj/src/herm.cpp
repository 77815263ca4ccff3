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

#include "qcskit/herm.hpp"

#include <cmath>
#include <sstream>

namespace qcskit {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void check_carrier(Index n) {
  if (n < 1) throw ValidationError("carrier dimension must be >= 1");
  if (n > kMaxCarrierDim) {
    std::ostringstream os;
    os << "carrier dimension " << n << " exceeds the supported maximum " << kMaxCarrierDim;
    throw ValidationError(os.str());
  }
}

}  // namespace

HermMat::HermMat(Matrix entries, double tol) : mat_(std::move(entries)) {
  if (mat_.rows() != mat_.cols()) throw DimensionError("HermMat: matrix is not square");
  check_carrier(mat_.rows());
  const double dev = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (!(dev <= tol)) {
    std::ostringstream os;
    os << "HermMat: entries deviate from Hermitian by " << dev;
    throw ValidationError(os.str());
  }
  mat_ = ((mat_ + mat_.adjoint()) / 2.0).eval();
}

HermMat HermMat::symmetrized(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("HermMat: matrix is not square");
  check_carrier(m.rows());
  return HermMat(((m + m.adjoint()) / 2.0).eval(), Raw{});
}

HermMat HermMat::diagonal(const RealVector& d) {
  Matrix m = Matrix::Zero(d.size(), d.size());
  for (Index i = 0; i < d.size(); ++i) m(i, i) = d(i);
  return symmetrized(m);
}

HermMat HermMat::projector(const Vector& v) {
  const double nrm2 = v.squaredNorm();
  if (nrm2 <= 0.0) throw ValidationError("projector: zero vector");
  return symmetrized((v * v.adjoint() / nrm2).eval());
}

HermMat HermMat::operator+(const HermMat& o) const {
  if (dim() != o.dim()) throw DimensionError("HermMat: carrier mismatch in +");
  return symmetrized(mat_ + o.mat_);
}

HermMat HermMat::operator-(const HermMat& o) const {
  if (dim() != o.dim()) throw DimensionError("HermMat: carrier mismatch in -");
  return symmetrized(mat_ - o.mat_);
}

HermMat HermMat::operator-() const { return symmetrized(-mat_); }

HermMat HermMat::operator*(double s) const { return symmetrized(mat_ * s); }

bool HermMat::approx_equal(const HermMat& o, double tol) const {
  if (dim() != o.dim()) return false;
  return (mat_ - o.mat_).cwiseAbs().maxCoeff() <= tol;
}

std::vector<HermMat> hermitian_basis(Index n) {
  check_carrier(n);
  std::vector<HermMat> basis;
  basis.reserve(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i) {
    Matrix m = Matrix::Zero(n, n);
    m(i, i) = 1.0;
    basis.push_back(HermMat::symmetrized(m));
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Matrix m = Matrix::Zero(n, n);
      m(i, j) = 1.0 / kSqrt2;
      m(j, i) = 1.0 / kSqrt2;
      basis.push_back(HermMat::symmetrized(m));
    }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Matrix m = Matrix::Zero(n, n);
      m(i, j) = Complex(0.0, 1.0 / kSqrt2);
      m(j, i) = Complex(0.0, -1.0 / kSqrt2);
      basis.push_back(HermMat::symmetrized(m));
    }
  return basis;
}

double inner(const HermMat& f, const HermMat& g) {
  if (f.dim() != g.dim()) throw DimensionError("inner: carrier mismatch");
  // tr(fg) = sum_ij f_ij conj(g_ij) for Hermitian g.
  const Complex t = f.mat().cwiseProduct(g.mat().conjugate()).sum();
  if (std::abs(t.imag()) > 1e-12 * std::max(1.0, std::abs(t.real())))
    throw ValidationError("inner: trace pairing has a non-negligible imaginary part");
  return t.real();
}

RealVector basis_coords(const HermMat& f) {
  const Index n = f.dim();
  RealVector c(n * n);
  Index k = 0;
  for (Index i = 0; i < n; ++i) c(k++) = f(i, i).real();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) c(k++) = kSqrt2 * f(i, j).real();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) c(k++) = kSqrt2 * f(i, j).imag();
  return c;
}

HermMat herm_from_coords(Index n, const RealVector& coords) {
  check_carrier(n);
  if (coords.size() != n * n) throw DimensionError("herm_from_coords: expected n^2 coordinates");
  Matrix m = Matrix::Zero(n, n);
  Index k = 0;
  for (Index i = 0; i < n; ++i) m(i, i) = coords(k++);
  const Index off = n + n * (n - 1) / 2;
  Index p = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const Complex v(coords(n + p) / kSqrt2, coords(off + p) / kSqrt2);
      m(i, j) = v;
      m(j, i) = std::conj(v);
      ++p;
    }
  return HermMat::symmetrized(m);
}

Spectrum spectral(const HermMat& f) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(f.mat());
  if (solver.info() != Eigen::Success) throw Error("spectral: eigensolver failed to converge");
  const Index n = f.dim();
  Spectrum s;
  s.eigenvalues = RealVector(n);
  s.eigenvectors = Matrix(n, n);
  for (Index i = 0; i < n; ++i) {  // Eigen sorts ascending; flip to descending
    s.eigenvalues(i) = solver.eigenvalues()(n - 1 - i);
    s.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return s;
}

double op_norm(const HermMat& f) {
  const Spectrum s = spectral(f);
  return s.eigenvalues.cwiseAbs().maxCoeff();
}

double trace_of(const HermMat& f) { return f.mat().trace().real(); }

bool is_psd(const HermMat& f, double tol) { return min_eigenvalue(f) >= -tol; }

double min_eigenvalue(const HermMat& f) {
  const Spectrum s = spectral(f);
  return s.eigenvalues(f.dim() - 1);
}

HermMat kron(const HermMat& f, const HermMat& g) {
  return HermMat::symmetrized(kron(f.mat(), g.mat()));
}

HermMat partial_trace(const HermMat& f, Index d1, Index d2, int which) {
  return HermMat::symmetrized(partial_trace(f.mat(), d1, d2, which));
}

HermMat interleave_permute(const HermMat& f, Index a1, Index b1, Index a2, Index b2) {
  return HermMat::symmetrized(interleave_permute(f.mat(), a1, b1, a2, b2));
}

}  // namespace qcskit
