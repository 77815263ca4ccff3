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
#include "qcskit/frobenius.hpp"
#include "qcskit/herm.hpp"
#include "qcskit/sampling.hpp"

#include <string>
#include <vector>

namespace qcskit::testing {

inline HermMat pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return HermMat(m);
}

inline HermMat pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return HermMat(m);
}

inline HermMat diag2(double a, double b) {
  RealVector d(2);
  d << a, b;
  return HermMat::diagonal(d);
}

/// The trivial one-dimensional algebra C with eps(1) = 1.
inline FrobeniusAlgebra algebra_c() {
  RealVector theta(1);
  theta << 1.0;
  FrobeniusAlgebra a = FrobeniusAlgebra::semisimple(theta);
  a.validate();
  return a;
}

/// The group algebra C[Z/2] in the group basis {1, g}, eps(1)=1, eps(g)=0.
/// Its idempotent weights are (1/2, 1/2).
inline FrobeniusAlgebra algebra_zz2() {
  const Index k = 2;
  std::vector<Complex> mu(8, Complex(0.0));
  const auto at = [&](Index a, Index b, Index c) -> Complex& {
    return mu[static_cast<std::size_t>((a * k + b) * k + c)];
  };
  at(0, 0, 0) = 1.0;  // 1*1 = 1
  at(0, 1, 1) = 1.0;  // 1*g = g
  at(1, 0, 1) = 1.0;  // g*1 = g
  at(1, 1, 0) = 1.0;  // g*g = 1
  Vector eps(2);
  eps << 1.0, 0.0;
  FrobeniusAlgebra a = FrobeniusAlgebra::from_structure(k, std::move(mu), std::move(eps));
  a.validate();
  return a;
}

inline FrobeniusAlgebra algebra_semisimple(const std::vector<double>& theta) {
  RealVector t(static_cast<Index>(theta.size()));
  for (std::size_t i = 0; i < theta.size(); ++i) t(static_cast<Index>(i)) = theta[i];
  FrobeniusAlgebra a = FrobeniusAlgebra::semisimple(t);
  a.validate();
  return a;
}

/// Corpus used across the relation and invariant suites.
inline std::vector<FrobeniusAlgebra> algebra_corpus() {
  return {algebra_c(), algebra_zz2(), algebra_semisimple({2.0, 3.0}),
          algebra_semisimple({1.0, 1.0}), algebra_semisimple({0.5, 1.5, 2.5})};
}

/// Random well-typed term built as a layered circuit: start from a stack of
/// wires and keep gluing generators onto random positions.
inline BordTermPtr random_circuit_term(Rng& rng, int layers, int start_wires) {
  std::uniform_int_distribution<int> pick_gen(0, 5);
  auto wires = [&](int count) -> BordTermPtr {
    BordTermPtr t = BordTerm::make_atom(Generator::Id);
    for (int i = 1; i < count; ++i) t = BordTerm::make_par(t, BordTerm::make_atom(Generator::Id));
    return t;
  };
  int width = start_wires;
  BordTermPtr term = width > 0 ? wires(width) : nullptr;
  for (int layer = 0; layer < layers; ++layer) {
    const Generator g = static_cast<Generator>(pick_gen(rng));
    const BoundaryType t = typecheck(*BordTerm::make_atom(g));
    if (t.in > width) continue;
    std::uniform_int_distribution<int> pos_dist(0, width - t.in);
    const int pos = width > t.in ? pos_dist(rng) : 0;
    BordTermPtr layer_term = BordTerm::make_atom(g);
    if (pos > 0) layer_term = BordTerm::make_par(wires(pos), layer_term);
    if (width - t.in - pos > 0)
      layer_term = BordTerm::make_par(layer_term, wires(width - t.in - pos));
    term = term ? BordTerm::make_seq(term, layer_term) : layer_term;
    width += t.out - t.in;
  }
  if (!term) term = BordTerm::make_atom(Generator::Cap);
  return term;
}

}  // namespace qcskit::testing
