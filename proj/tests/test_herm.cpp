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
#include "qcskit/sampling.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace qcskit;
using namespace qcskit::testing;

TEST_CASE("hermitian basis is orthonormal in the fixed order") {
  SUBCASE("n = 1") {
    const auto basis = hermitian_basis(1);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0](0, 0) == Complex(1.0));
  }
  SUBCASE("n = 2 gram matrix is the identity") {
    const auto basis = hermitian_basis(2);
    REQUIRE(basis.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(inner(basis[i], basis[j]) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
  }
  SUBCASE("diagonal units come first, then symmetric, then antisymmetric") {
    const auto basis = hermitian_basis(2);
    CHECK(basis[0](0, 0).real() == 1.0);
    CHECK(basis[1](1, 1).real() == 1.0);
    CHECK(basis[2](0, 1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(basis[3](0, 1).imag() == doctest::Approx(1.0 / std::sqrt(2.0)));
  }
  SUBCASE("rejects n = 0 and n > 64") {
    CHECK_THROWS_AS(hermitian_basis(0), ValidationError);
    CHECK_THROWS_AS(hermitian_basis(65), ValidationError);
  }
}

TEST_CASE("coordinates reconstruct the matrix") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const HermMat f = sample_gaussian_herm(3, rng);
    const RealVector coords = basis_coords(f);
    REQUIRE(coords.size() == 9);
    const HermMat back = herm_from_coords(3, coords);
    CHECK((back.mat() - f.mat()).cwiseAbs().maxCoeff() <= 1e-12);
    // Coordinates agree with explicit basis inner products.
    const auto basis = hermitian_basis(3);
    for (Index k = 0; k < 9; ++k)
      CHECK(coords(k) == doctest::Approx(inner(basis[static_cast<std::size_t>(k)], f)).epsilon(1e-12));
  }
}

TEST_CASE("inner computes the trace pairing") {
  CHECK(inner(diag2(1, 0), diag2(1, 0)) == doctest::Approx(1.0));
  CHECK(inner(pauli_x(), pauli_z()) == doctest::Approx(0.0));
  CHECK(inner(HermMat::identity(2), HermMat::identity(2)) == doctest::Approx(2.0));
  CHECK_THROWS_AS(inner(HermMat::identity(2), HermMat::identity(3)), DimensionError);
  SUBCASE("coordinate isometry") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const Index n = 1 + static_cast<Index>(trial % 4);
      const HermMat f = sample_gaussian_herm(n, rng);
      const HermMat g = sample_gaussian_herm(n, rng);
      const double direct = inner(f, g);
      const double via_coords = basis_coords(f).dot(basis_coords(g));
      CHECK(std::abs(direct - via_coords) <= 1e-12 * std::max(1.0, std::abs(direct)));
      CHECK(inner(f, g) == doctest::Approx(inner(g, f)).epsilon(1e-12));
    }
  }
}

TEST_CASE("spectral decomposition") {
  SUBCASE("diag(3,-1)") {
    const Spectrum s = spectral(diag2(3, -1));
    CHECK(s.eigenvalues(0) == doctest::Approx(3.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(-1.0));
    CHECK(op_norm(diag2(3, -1)) == doctest::Approx(3.0));
    CHECK(trace_of(diag2(3, -1)) == doctest::Approx(2.0));
    CHECK_FALSE(is_psd(diag2(3, -1)));
  }
  SUBCASE("pauli x") {
    const Spectrum s = spectral(pauli_x());
    CHECK(s.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(-1.0));
  }
  SUBCASE("reconstruction residual over seeded dims 1-6") {
    Rng rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
      const Index n = 1 + static_cast<Index>(trial % 6);
      const HermMat f = sample_gaussian_herm(n, rng);
      const Spectrum s = spectral(f);
      Matrix rebuilt = Matrix::Zero(n, n);
      for (Index i = 0; i < n; ++i)
        rebuilt += s.eigenvalues(i) * (s.eigenvectors.col(i) * s.eigenvectors.col(i).adjoint());
      const double scale = std::max(1.0, f.mat().norm());
      CHECK((rebuilt - f.mat()).norm() <= 1e-9 * scale);
      const Matrix gram = s.eigenvectors.adjoint() * s.eigenvectors;
      CHECK((gram - Matrix::Identity(n, n)).norm() <= 1e-9);
    }
  }
}

TEST_CASE("kron block convention and bilinearity of the pairing") {
  SUBCASE("diag(1,2) x diag(3,4)") {
    const HermMat k = kron(diag2(1, 2), diag2(3, 4));
    RealVector expect(4);
    expect << 3, 4, 6, 8;
    for (Index i = 0; i < 4; ++i) CHECK(k(i, i).real() == doctest::Approx(expect(i)));
  }
  SUBCASE("identity x identity") {
    CHECK(kron(HermMat::identity(2), HermMat::identity(2))
              .approx_equal(HermMat::identity(4), 1e-15));
  }
  SUBCASE("inner factorizes over products") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      const HermMat f = sample_gaussian_herm(2, rng);
      const HermMat g = sample_gaussian_herm(3, rng);
      const HermMat f2 = sample_gaussian_herm(2, rng);
      const HermMat g2 = sample_gaussian_herm(3, rng);
      const double lhs = inner(kron(f, g), kron(f2, g2));
      const double rhs = inner(f, f2) * inner(g, g2);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
      CHECK(trace_of(kron(f, g)) ==
            doctest::Approx(trace_of(f) * trace_of(g)).epsilon(1e-12));
    }
  }
}

TEST_CASE("partial trace") {
  SUBCASE("product cases") {
    const HermMat prod = kron(diag2(1, 2), diag2(3, 4));
    CHECK(partial_trace(prod, 2, 2, 2).approx_equal(diag2(1, 2) * 7.0, 1e-12));
    CHECK(partial_trace(HermMat::identity(4), 2, 2, 1)
              .approx_equal(HermMat::identity(2) * 2.0, 1e-12));
  }
  SUBCASE("trace preservation on seeded draws") {
    Rng rng(19);
    for (int trial = 0; trial < 1000; ++trial) {
      const HermMat f = sample_gaussian_herm(4, rng);
      CHECK(std::abs(trace_of(partial_trace(f, 2, 2, 2)) - trace_of(f)) <= 1e-12);
      CHECK(std::abs(trace_of(partial_trace(f, 2, 2, 1)) - trace_of(f)) <= 1e-12);
    }
  }
  SUBCASE("partial trace of kron recovers scaled factors") {
    Rng rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
      const HermMat a = sample_gaussian_herm(2, rng);
      const HermMat b = sample_gaussian_herm(3, rng);
      const HermMat prod = kron(a, b);
      CHECK(partial_trace(prod, 2, 3, 2).approx_equal(a * trace_of(b), 1e-11));
      CHECK(partial_trace(prod, 2, 3, 1).approx_equal(b * trace_of(a), 1e-11));
    }
  }
  SUBCASE("dimension mismatch rejected") {
    CHECK_THROWS_AS(partial_trace(HermMat::identity(4), 3, 2, 1), DimensionError);
    CHECK_THROWS_AS(partial_trace(HermMat::identity(4), 2, 2, 3), DimensionError);
  }
}

TEST_CASE("interleave permute reorders tensor factors") {
  SUBCASE("all dims one is the identity map") {
    const HermMat f = HermMat::identity(1);
    CHECK(interleave_permute(f, 1, 1, 1, 1).approx_equal(f, 0.0));
  }
  SUBCASE("matches the directly built reordering") {
    Rng rng(29);
    for (int trial = 0; trial < 50; ++trial) {
      const HermMat a = sample_gaussian_herm(2, rng);
      const HermMat b = sample_gaussian_herm(2, rng);
      const HermMat c = sample_gaussian_herm(2, rng);
      const HermMat d = sample_gaussian_herm(2, rng);
      const HermMat lhs = interleave_permute(kron(kron(a, b), kron(c, d)), 2, 2, 2, 2);
      const HermMat rhs = kron(kron(a, c), kron(b, d));
      CHECK(lhs.approx_equal(rhs, 1e-11));
    }
  }
  SUBCASE("preserves the spectrum") {
    Rng rng(31);
    const HermMat f = sample_gaussian_herm(8, rng);
    const HermMat g = interleave_permute(f, 2, 2, 2, 1);
    const Spectrum sf = spectral(f);
    const Spectrum sg = spectral(g);
    for (Index i = 0; i < 8; ++i)
      CHECK(sf.eigenvalues(i) == doctest::Approx(sg.eigenvalues(i)).epsilon(1e-9));
  }
}

TEST_CASE("herm validation") {
  Matrix bad(2, 2);
  bad << 1.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 1.0;  // not Hermitian
  CHECK_THROWS_AS(HermMat{bad}, ValidationError);
  CHECK_THROWS_AS(HermMat{Matrix::Zero(2, 3)}, DimensionError);
  CHECK_THROWS_AS(HermMat{Matrix::Zero(65, 65)}, ValidationError);
  // Arithmetic re-symmetrizes exactly.
  Rng rng(37);
  const HermMat f = sample_gaussian_herm(3, rng);
  const HermMat sum = f + f * 0.5;
  CHECK((sum.mat() - sum.mat().adjoint()).cwiseAbs().maxCoeff() == 0.0);
}
