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

#include "qcskit/frobenius.hpp"

#include <cmath>
#include <sstream>

namespace qcskit {

FrobeniusAlgebra FrobeniusAlgebra::from_structure(Index dim, std::vector<Complex> mu_flat,
                                                  Vector counit) {
  if (dim < 1) throw ValidationError("FrobeniusAlgebra: dimension must be >= 1");
  if (static_cast<Index>(mu_flat.size()) != dim * dim * dim)
    throw DimensionError("FrobeniusAlgebra: structure constants must have dim^3 entries");
  if (counit.size() != dim) throw DimensionError("FrobeniusAlgebra: counit length mismatch");
  for (const auto& z : mu_flat)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ValidationError("FrobeniusAlgebra: structure constants must be finite");

  FrobeniusAlgebra A;
  A.dim_ = dim;
  A.mu_flat_ = std::move(mu_flat);
  A.counit_ = std::move(counit);

  // Solve mul(u (x) x_b) = x_b for the unit coordinates: the k^2 x k system
  // sum_a u_a mu(a,b,c) = delta_bc.
  Matrix lhs(dim * dim, dim);
  Vector rhs(dim * dim);
  for (Index b = 0; b < dim; ++b)
    for (Index c = 0; c < dim; ++c) {
      for (Index a = 0; a < dim; ++a) lhs(b * dim + c, a) = A.mu(a, b, c);
      rhs(b * dim + c) = (b == c) ? 1.0 : 0.0;
    }
  const Vector u = lhs.colPivHouseholderQr().solve(rhs);
  if ((lhs * u - rhs).cwiseAbs().maxCoeff() > 1e-9)
    throw ValidationError("FrobeniusAlgebra: structure constants admit no unit element");
  A.unit_ = u;
  return A;
}

FrobeniusAlgebra FrobeniusAlgebra::semisimple(const RealVector& theta) {
  const Index k = theta.size();
  if (k < 1) throw ValidationError("FrobeniusAlgebra: empty weight vector");
  for (Index i = 0; i < k; ++i)
    if (!std::isfinite(theta(i)) || theta(i) == 0.0)
      throw ValidationError("FrobeniusAlgebra: semisimple weights must be finite and nonzero");
  FrobeniusAlgebra A;
  A.dim_ = k;
  A.mu_flat_.assign(static_cast<std::size_t>(k * k * k), Complex(0.0));
  for (Index i = 0; i < k; ++i) A.mu_flat_[A.idx(i, i, i)] = 1.0;
  A.unit_ = Vector::Ones(k);
  A.counit_ = theta.cast<Complex>();
  A.theta_ = theta;
  return A;
}

Matrix FrobeniusAlgebra::pairing() const {
  Matrix P = Matrix::Zero(dim_, dim_);
  for (Index a = 0; a < dim_; ++a)
    for (Index b = 0; b < dim_; ++b) {
      Complex acc = 0.0;
      for (Index c = 0; c < dim_; ++c) acc += mu(a, b, c) * counit_(c);
      P(a, b) = acc;
    }
  return P;
}

namespace {

Matrix mul_matrix(const FrobeniusAlgebra& A) {
  const Index k = A.dim();
  Matrix m(k, k * k);
  for (Index c = 0; c < k; ++c)
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b) m(c, a * k + b) = A.mu(a, b, c);
  return m;
}

Matrix comul_matrix(const FrobeniusAlgebra& A, const Matrix& pairing_inv) {
  const Index k = A.dim();
  Matrix d(k * k, k);
  for (Index c = 0; c < k; ++c)
    for (Index e = 0; e < k; ++e)
      for (Index b = 0; b < k; ++b) {
        Complex acc = 0.0;
        for (Index a = 0; a < k; ++a) acc += A.mu(c, a, e) * pairing_inv(a, b);
        d(e * k + b, c) = acc;
      }
  return d;
}

Matrix swap_matrix(Index k) {
  Matrix s = Matrix::Zero(k * k, k * k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) s(b * k + a, a * k + b) = 1.0;
  return s;
}

double pairing_min_singular(const Matrix& P) {
  Eigen::JacobiSVD<Matrix> svd(P);
  return svd.singularValues().minCoeff();
}

}  // namespace

AuditReport FrobeniusAlgebra::validate(double tol) const {
  AuditReport report{"frobenius-validate", {}};
  const Index k = dim_;
  const Matrix P = pairing();

  Check comm{"commutativity"};
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b)
      for (Index c = 0; c < k; ++c)
        comm.residual = std::max(comm.residual, std::abs(mu(a, b, c) - mu(b, a, c)));
  if (comm.residual > tol) comm.pass = false;
  report.add(comm);

  Check assoc{"associativity"};
  for (Index a = 0; a < k && assoc.residual <= tol; ++a)
    for (Index b = 0; b < k; ++b)
      for (Index c = 0; c < k; ++c)
        for (Index d = 0; d < k; ++d) {
          Complex left = 0.0, right = 0.0;
          for (Index e = 0; e < k; ++e) {
            left += mu(a, b, e) * mu(e, c, d);
            right += mu(b, c, e) * mu(a, e, d);
          }
          assoc.residual = std::max(assoc.residual, std::abs(left - right));
        }
  if (assoc.residual > tol) assoc.pass = false;
  report.add(assoc);

  Check unit_law{"unit-law"};
  for (Index b = 0; b < k; ++b)
    for (Index c = 0; c < k; ++c) {
      Complex acc = 0.0;
      for (Index a = 0; a < k; ++a) acc += unit_(a) * mu(a, b, c);
      unit_law.residual =
          std::max(unit_law.residual, std::abs(acc - Complex(b == c ? 1.0 : 0.0)));
    }
  if (unit_law.residual > tol) unit_law.pass = false;
  report.add(unit_law);

  Check nondegen{"pairing-nondegeneracy"};
  {
    const double herm_dev = (P - P.adjoint()).cwiseAbs().maxCoeff();
    double smallest;
    if (herm_dev <= tol) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(P);
      smallest = es.eigenvalues().cwiseAbs().minCoeff();
      nondegen.note("pairing is Hermitian; using min |eigenvalue|");
      Check unitary{"unitarity-flag"};
      unitary.pass = true;
      unitary.residual = es.eigenvalues().minCoeff();
      unitary.note(es.eigenvalues().minCoeff() > tol
                       ? "pairing positive definite: unitary"
                       : "pairing not positive definite: not unitary");
      report.add(unitary);
    } else {
      smallest = pairing_min_singular(P);
      nondegen.note("pairing not Hermitian; using min singular value");
      Check unitary{"unitarity-flag"};
      unitary.note("pairing not Hermitian: not unitary");
      report.add(unitary);
    }
    nondegen.residual = smallest;
    if (smallest < tol) {
      nondegen.pass = false;
      nondegen.note("degenerate pairing");
    }
  }
  report.add(nondegen);

  if (!nondegen.pass) {
    validated_ = false;
    return report;
  }

  // The remaining laws involve the derived comultiplication.
  const Matrix Pinv = P.fullPivLu().inverse();
  const Matrix m = mul_matrix(*this);
  const Matrix d = comul_matrix(*this, Pinv);
  const Matrix id = Matrix::Identity(k, k);
  const Matrix cap = unit_;
  const Matrix cup = counit_.transpose();

  const auto residual = [](const Matrix& x, const Matrix& y) {
    return (x - y).cwiseAbs().maxCoeff();
  };

  Check counit_law{"counit-law"};
  counit_law.residual = std::max(residual(kron(cup, id) * d, id), residual(kron(id, cup) * d, id));
  if (counit_law.residual > tol) counit_law.pass = false;
  report.add(counit_law);

  Check coassoc{"coassociativity"};
  coassoc.residual = residual(kron(d, id) * d, kron(id, d) * d);
  if (coassoc.residual > tol) coassoc.pass = false;
  report.add(coassoc);

  Check frob{"frobenius-relation"};
  {
    const Matrix middle = d * m;
    frob.residual = std::max(residual(kron(m, id) * kron(id, d), middle),
                             residual(kron(id, m) * kron(d, id), middle));
  }
  if (frob.residual > tol) frob.pass = false;
  report.add(frob);

  Check cap_check{"unit-reproduces-identity"};
  cap_check.residual = residual(m * kron(cap, id), id);
  if (cap_check.residual > tol) cap_check.pass = false;
  report.add(cap_check);

  validated_ = report.pass();
  return report;
}

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::Cap: return "cap";
    case Generator::Cup: return "cup";
    case Generator::Mul: return "mul";
    case Generator::Comul: return "comul";
    case Generator::Id: return "id";
    case Generator::Swap: return "swap";
  }
  return "?";
}

int generator_euler(Generator g) {
  switch (g) {
    case Generator::Cap:
    case Generator::Cup:
      return 1;
    case Generator::Mul:
    case Generator::Comul:
      return -1;
    case Generator::Id:
    case Generator::Swap:
      return 0;
  }
  return 0;
}

GeneratorMap generator_matrix(const FrobeniusAlgebra& algebra, Generator name) {
  if (!algebra.validated())
    throw ValidationError("generator_matrix: algebra has not passed validation");
  const Index k = algebra.dim();
  Matrix m;
  switch (name) {
    case Generator::Cap:
      m = algebra.unit();
      break;
    case Generator::Cup:
      m = algebra.counit().transpose();
      break;
    case Generator::Mul:
      m = mul_matrix(algebra);
      break;
    case Generator::Comul:
      m = comul_matrix(algebra, algebra.pairing().fullPivLu().inverse());
      break;
    case Generator::Id:
      m = Matrix::Identity(k, k);
      break;
    case Generator::Swap:
      m = swap_matrix(k);
      break;
  }
  return GeneratorMap{name, std::move(m), generator_euler(name)};
}

}  // namespace qcskit
