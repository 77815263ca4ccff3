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

#include "qcskit/frobenius.hpp"

#include <memory>
#include <string>
#include <vector>

namespace qcskit {

/// Term over the (1+1)-dimensional bordism generators.
///
/// Grammar:   term   := factor { ";" factor }
///            factor := atom { "*" atom }
///            atom   := "cap" | "cup" | "mul" | "comul" | "id" | "swap"
///                    | "(" term ")"
/// ";" is sequential gluing read left to right (diagrammatic order, the way
/// bordisms are drawn), "*" is disjoint union; ";" binds looser; both
/// associate left.
struct BordTerm {
  enum class Kind { Atom, Seq, Par };

  Kind kind = Kind::Atom;
  Generator atom = Generator::Id;
  std::shared_ptr<const BordTerm> left, right;
  int line = 1, col = 1;  // the atom, or the ";" / "*" of a binary node

  static std::shared_ptr<const BordTerm> make_atom(Generator g, int line = 1, int col = 1);
  static std::shared_ptr<const BordTerm> make_seq(std::shared_ptr<const BordTerm> a,
                                                  std::shared_ptr<const BordTerm> b, int line = 1,
                                                  int col = 1);
  static std::shared_ptr<const BordTerm> make_par(std::shared_ptr<const BordTerm> a,
                                                  std::shared_ptr<const BordTerm> b, int line = 1,
                                                  int col = 1);
};

using BordTermPtr = std::shared_ptr<const BordTerm>;

bool term_equal(const BordTerm& a, const BordTerm& b);

/// Lexical or syntax error, with position and the token set that was
/// expected there.
struct BordParseError : Error {
  BordParseError(std::string msg, int line, int col);
  int line, col;
};

/// Sequential gluing with mismatched boundaries; carries the node path from
/// the root and the position of the offending ";".
struct GluingMismatch : Error {
  GluingMismatch(std::string msg, std::string path, int line, int col);
  std::string path;
  int line, col;
};

inline constexpr std::size_t kMaxBordSource = 64 * 1024;

BordTermPtr parse_bord(const std::string& text);

/// Boundary circle counts, in then out. Atoms: cap 0->1, cup 1->0,
/// mul 2->1, comul 1->2, id 1->1, swap 2->2; disjoint union adds.
struct BoundaryType {
  int in = 0;
  int out = 0;
};

BoundaryType typecheck(const BordTerm& term);

/// Additive over gluing and disjoint union; closed terms satisfy chi = 2-2g.
int euler_char(const BordTerm& term);

/// Minimal-parenthesis rendering; parse(pretty_print(t)) reproduces t.
std::string pretty_print(const BordTerm& term);

/// Functor evaluation: atoms to generator matrices, ";" to matrix product
/// (later factor on the left), "*" to Kronecker product. Shape k^out x k^in.
Matrix evaluate(const BordTerm& term, const FrobeniusAlgebra& algebra);

/// The commutative Frobenius relation pairs, as term strings. Both sides of
/// each pair evaluate equal under any validated algebra and share the same
/// Euler characteristic.
struct RelationPair {
  std::string name;
  std::string lhs;
  std::string rhs;
};

const std::vector<RelationPair>& frobenius_relations();

}  // namespace qcskit
