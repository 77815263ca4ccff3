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

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace qcskit;
using namespace qcskit::testing;

TEST_CASE("validation of the corpus algebras") {
  SUBCASE("the trivial algebra validates with zero residuals") {
    const FrobeniusAlgebra a = algebra_c();
    const auto report = a.validate();
    CHECK(report.pass());
    for (const auto& c : report.checks)
      if (c.name != "pairing-nondegeneracy" && c.name != "unitarity-flag")
        CHECK(c.residual <= 1e-15);
  }
  SUBCASE("group algebra of Z/2: pairing is the identity") {
    const FrobeniusAlgebra a = algebra_zz2();
    CHECK(a.validate().pass());
    CHECK((a.pairing() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-15);
  }
  SUBCASE("semisimple with weights (2,3)") {
    CHECK(algebra_semisimple({2.0, 3.0}).validate().pass());
  }
  SUBCASE("unit element is solved from the structure constants") {
    const FrobeniusAlgebra a = algebra_zz2();
    CHECK(std::abs(a.unit()(0) - Complex(1.0)) <= 1e-12);
    CHECK(std::abs(a.unit()(1)) <= 1e-12);
  }
  SUBCASE("degenerate pairing is rejected") {
    // dim-1 algebra with vanishing counit: x*x = x, eps = 0.
    FrobeniusAlgebra a = FrobeniusAlgebra::from_structure(1, {Complex(1.0)}, Vector::Zero(1));
    const auto report = a.validate();
    CHECK_FALSE(report.pass());
    CHECK_FALSE(a.validated());
  }
  SUBCASE("non-associative structure constants fail") {
    // x_a x_b = x_0 always: no unit can exist.
    std::vector<Complex> mu(8, Complex(0.0));
    for (Index a = 0; a < 2; ++a)
      for (Index b = 0; b < 2; ++b) mu[static_cast<std::size_t>((a * 2 + b) * 2)] = 1.0;
    Vector eps(2);
    eps << 1.0, 1.0;
    CHECK_THROWS_AS(FrobeniusAlgebra::from_structure(2, std::move(mu), std::move(eps)),
                    ValidationError);
  }
  SUBCASE("semisimple weights must be nonzero") {
    RealVector theta(2);
    theta << 1.0, 0.0;
    CHECK_THROWS_AS(FrobeniusAlgebra::semisimple(theta), ValidationError);
  }
}

TEST_CASE("generator matrices") {
  SUBCASE("trivial algebra: every generator is the scalar one") {
    const FrobeniusAlgebra a = algebra_c();
    for (Generator g : {Generator::Cap, Generator::Cup, Generator::Mul, Generator::Comul,
                        Generator::Id, Generator::Swap}) {
      const GeneratorMap m = generator_matrix(a, g);
      CHECK((m.matrix.cwiseAbs().maxCoeff() - 1.0) <= 1e-15);
    }
  }
  SUBCASE("shapes") {
    const FrobeniusAlgebra a = algebra_zz2();
    CHECK(generator_matrix(a, Generator::Cap).matrix.rows() == 2);
    CHECK(generator_matrix(a, Generator::Cap).matrix.cols() == 1);
    CHECK(generator_matrix(a, Generator::Cup).matrix.rows() == 1);
    CHECK(generator_matrix(a, Generator::Mul).matrix.cols() == 4);
    CHECK(generator_matrix(a, Generator::Comul).matrix.rows() == 4);
    CHECK(generator_matrix(a, Generator::Swap).matrix.rows() == 4);
  }
  SUBCASE("euler characteristics") {
    CHECK(generator_euler(Generator::Cap) == 1);
    CHECK(generator_euler(Generator::Cup) == 1);
    CHECK(generator_euler(Generator::Mul) == -1);
    CHECK(generator_euler(Generator::Comul) == -1);
    CHECK(generator_euler(Generator::Id) == 0);
    CHECK(generator_euler(Generator::Swap) == 0);
  }
  SUBCASE("idempotent multiplication and pairing-dual comultiplication") {
    const FrobeniusAlgebra a = algebra_semisimple({1.0, 1.0});
    const Matrix mul = generator_matrix(a, Generator::Mul).matrix;
    // e_i e_i = e_i and cross terms vanish.
    CHECK(std::abs(mul(0, 0) - Complex(1.0)) <= 1e-14);
    CHECK(std::abs(mul(1, 3) - Complex(1.0)) <= 1e-14);
    CHECK(mul.cwiseAbs().sum() == doctest::Approx(2.0));
    const Matrix comul = generator_matrix(a, Generator::Comul).matrix;
    CHECK(std::abs(comul(0, 0) - Complex(1.0)) <= 1e-14);
    CHECK(std::abs(comul(3, 1) - Complex(1.0)) <= 1e-14);
  }
  SUBCASE("comultiplication weights are reciprocal theta") {
    const FrobeniusAlgebra a = algebra_semisimple({2.0, 3.0});
    const Matrix comul = generator_matrix(a, Generator::Comul).matrix;
    CHECK(std::abs(comul(0, 0) - Complex(0.5)) <= 1e-12);
    CHECK(std::abs(comul(3, 1) - Complex(1.0 / 3.0)) <= 1e-12);
  }
  SUBCASE("swap commutes the multiplication") {
    for (const auto& a : algebra_corpus()) {
      const Matrix mul = generator_matrix(a, Generator::Mul).matrix;
      const Matrix swap = generator_matrix(a, Generator::Swap).matrix;
      CHECK(((mul * swap) - mul).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
  SUBCASE("unvalidated algebras are rejected") {
    FrobeniusAlgebra raw;
    CHECK_THROWS_AS(generator_matrix(raw, Generator::Id), ValidationError);
  }
}

TEST_CASE("closed surface invariants") {
  SUBCASE("the trivial theory assigns one to every genus") {
    const FrobeniusAlgebra a = algebra_c();
    for (int g = 0; g < 4; ++g)
      CHECK(std::abs(closed_surface_invariant(a, g) - Complex(1.0)) <= 1e-12);
  }
  SUBCASE("group algebra of Z/2 against the power-sum oracle") {
    const FrobeniusAlgebra a = algebra_zz2();
    // Idempotent weights are (1/2, 1/2); both routes agree on every genus.
    for (int g = 0; g < 4; ++g) {
      const Complex composite = closed_surface_invariant(a, g);
      const Complex oracle = power_sum_invariant({0.5, 0.5}, g);
      CHECK(std::abs(composite - oracle) <= 1e-9);
    }
    CHECK(std::abs(closed_surface_invariant(a, 0) - Complex(1.0)) <= 1e-12);
    CHECK(std::abs(closed_surface_invariant(a, 1) - Complex(2.0)) <= 1e-12);
    CHECK(std::abs(closed_surface_invariant(a, 2) - Complex(4.0)) <= 1e-12);
  }
  SUBCASE("weights (2,3)") {
    const FrobeniusAlgebra a = algebra_semisimple({2.0, 3.0});
    CHECK(std::abs(closed_surface_invariant(a, 0) - Complex(5.0)) <= 1e-12);
    CHECK(std::abs(closed_surface_invariant(a, 1) - Complex(2.0)) <= 1e-12);
    CHECK(std::abs(closed_surface_invariant(a, 2) - Complex(5.0 / 6.0)) <= 1e-12);
  }
  SUBCASE("torus invariant equals the dimension") {
    for (const auto& a : algebra_corpus())
      CHECK(std::abs(closed_surface_invariant(a, 1) - Complex(static_cast<double>(a.dim()))) <=
            1e-9);
  }
  SUBCASE("twenty seeded weight vectors, genus zero to three") {
    Rng rng(31);
    std::uniform_real_distribution<double> weight(0.25, 4.0);
    std::uniform_int_distribution<int> dims(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
      const int k = dims(rng);
      std::vector<double> theta;
      for (int i = 0; i < k; ++i) theta.push_back(weight(rng));
      const FrobeniusAlgebra a = algebra_semisimple(theta);
      for (int g = 0; g < 4; ++g) {
        const Complex composite = closed_surface_invariant(a, g);
        const Complex oracle = power_sum_invariant(theta, g);
        CHECK(std::abs(composite - oracle) <= 1e-9 * std::max(1.0, std::abs(oracle)));
        CHECK(std::abs(composite.imag()) <= 1e-9);
      }
    }
  }
  SUBCASE("negative genus is rejected") {
    CHECK_THROWS_AS(closed_surface_invariant(algebra_c(), -1), ValidationError);
  }
}
