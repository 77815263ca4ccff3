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

#include "qcskit/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace qcskit {

HermMat sample_gaussian_herm(Index n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  RealVector coords(n * n);
  for (Index i = 0; i < coords.size(); ++i) coords(i) = gauss(rng);
  return herm_from_coords(n, coords);
}

namespace {

HermMat clamp_spectrum(const HermMat& f, double lo, double hi) {
  const Spectrum s = spectral(f);
  Matrix out = Matrix::Zero(f.dim(), f.dim());
  for (Index i = 0; i < f.dim(); ++i) {
    const double lam = std::clamp(s.eigenvalues(i), lo, hi);
    out += lam * (s.eigenvectors.col(i) * s.eigenvectors.col(i).adjoint());
  }
  return HermMat::symmetrized(out);
}

}  // namespace

HermMat sample_canonical_member(Index n, Canonical which, Rng& rng) {
  const HermMat g = sample_gaussian_herm(n, rng);
  if (which == Canonical::D) return clamp_spectrum(g, 0.0, 1.0);
  const HermMat psd = clamp_spectrum(g, 0.0, kInf);
  const double tr = trace_of(psd);
  return psd * (1.0 / std::max(1.0, tr));
}

HermMat sample_canonical_nonmember(Index n, Canonical which, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  std::uniform_int_distribution<int> mode_dist(0, 1);
  const int mode = mode_dist(rng);
  const HermMat g = sample_gaussian_herm(n, rng);
  if (mode == 0) {
    // Shift so the least eigenvalue is strictly negative.
    const double margin = unif(rng);
    return g - HermMat::identity(n) * (min_eigenvalue(g) + margin);
  }
  // PSD draw rescaled past the bound that `which` enforces.
  const HermMat psd = clamp_spectrum(g, 0.0, kInf);
  const double margin = 1.0 + unif(rng);
  if (which == Canonical::D) {
    const double nrm = op_norm(psd);
    if (nrm < 1e-6) return HermMat::identity(n) * margin;
    return psd * (margin / nrm);
  }
  const double tr = trace_of(psd);
  if (tr < 1e-6) return HermMat::identity(n) * margin;
  return psd * (margin / tr);
}

Matrix sample_complex_gaussian(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
  return m;
}

Matrix sample_unitary(Index n, Rng& rng) {
  const Matrix g = sample_complex_gaussian(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < n; ++i) {  // fix the phase convention
    const Complex d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

}  // namespace qcskit
