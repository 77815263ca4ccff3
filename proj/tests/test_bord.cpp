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

#include "qcskit/bord.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace qcskit;
using namespace qcskit::testing;

TEST_CASE("parsing and typing") {
  SUBCASE("the sphere") {
    const auto t = parse_bord("cap ; cup");
    const auto type = typecheck(*t);
    CHECK(type.in == 0);
    CHECK(type.out == 0);
    CHECK(euler_char(*t) == 2);
  }
  SUBCASE("the torus composite") {
    const auto t = parse_bord("cap ; comul ; mul ; cup");
    const auto type = typecheck(*t);
    CHECK(type.in == 0);
    CHECK(type.out == 0);
    CHECK(euler_char(*t) == 0);
  }
  SUBCASE("genus two") {
    CHECK(euler_char(*parse_bord("cap ; comul ; mul ; comul ; mul ; cup")) == -2);
  }
  SUBCASE("gluing mismatch reports the offending semicolon") {
    const auto t = parse_bord("mul ; cap");
    try {
      typecheck(*t);
      FAIL("expected a gluing mismatch");
    } catch (const GluingMismatch& e) {
      CHECK(e.line == 1);
      CHECK(e.col == 5);
      CHECK(std::string(e.what()).find("1 circle") != std::string::npos);
    }
  }
  SUBCASE("boundary counts") {
    const auto check_type = [](const std::string& s, int in, int out) {
      const auto type = typecheck(*parse_bord(s));
      CHECK(type.in == in);
      CHECK(type.out == out);
    };
    check_type("id * id", 2, 2);
    check_type("comul ; swap ; mul", 1, 1);
    check_type("(cap * id) ; mul", 1, 1);
  }
  SUBCASE("whitespace and precedence") {
    CHECK(term_equal(*parse_bord("cap;cup"), *parse_bord("  cap \n ; \t cup ")));
    // ';' binds looser than '*' and both associate left.
    CHECK(term_equal(*parse_bord("id * id ; swap"), *parse_bord("(id * id) ; swap")));
    CHECK_FALSE(term_equal(*parse_bord("id ; id ; id"), *parse_bord("id ; (id ; id)")));
  }
}

TEST_CASE("parse errors carry positions and expectations") {
  SUBCASE("unknown word") {
    try {
      parse_bord("cap ; pants");
      FAIL("expected a parse error");
    } catch (const BordParseError& e) {
      CHECK(e.line == 1);
      CHECK(e.col == 7);
      CHECK(std::string(e.what()).find("cap, cup, mul, comul, id, swap") != std::string::npos);
    }
  }
  SUBCASE("unexpected character") {
    CHECK_THROWS_AS(parse_bord("cap @ cup"), BordParseError);
  }
  SUBCASE("missing closing paren") {
    try {
      parse_bord("(cap ; cup");
      FAIL("expected a parse error");
    } catch (const BordParseError& e) {
      CHECK(std::string(e.what()).find("')'") != std::string::npos);
    }
  }
  SUBCASE("dangling operator") {
    CHECK_THROWS_AS(parse_bord("cap ;"), BordParseError);
    CHECK_THROWS_AS(parse_bord("* cap"), BordParseError);
  }
  SUBCASE("size limit") {
    std::string big(kMaxBordSource + 1, ' ');
    CHECK_THROWS_AS(parse_bord(big), BordParseError);
  }
}

TEST_CASE("pretty print round trip") {
  SUBCASE("fifty-term seeded corpus") {
    Rng rng(97);
    int printed = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const BordTermPtr t = random_circuit_term(rng, 3 + trial % 6, 1 + trial % 3);
      const std::string text = pretty_print(*t);
      const BordTermPtr back = parse_bord(text);
      CHECK(term_equal(*t, *back));
      CHECK(pretty_print(*back) == text);
      ++printed;
    }
    CHECK(printed == 50);
  }
  SUBCASE("nesting that needs parentheses") {
    const auto t = BordTerm::make_seq(BordTerm::make_atom(Generator::Id),
                                      BordTerm::make_seq(BordTerm::make_atom(Generator::Id),
                                                         BordTerm::make_atom(Generator::Id)));
    CHECK(pretty_print(*t) == "id ; (id ; id)");
    CHECK(term_equal(*parse_bord(pretty_print(*t)), *t));
  }
}

TEST_CASE("evaluation through a Frobenius algebra") {
  SUBCASE("identity wire") {
    const Matrix m = evaluate(*parse_bord("id"), algebra_zz2());
    CHECK((m - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-15);
  }
  SUBCASE("torus scalar equals the dimension") {
    const Matrix m = evaluate(*parse_bord("cap ; comul ; mul ; cup"), algebra_zz2());
    REQUIRE(m.rows() == 1);
    CHECK(std::abs(m(0, 0) - Complex(2.0)) <= 1e-12);
  }
  SUBCASE("left unit law evaluates to the identity") {
    for (const auto& a : algebra_corpus()) {
      const Matrix lhs = evaluate(*parse_bord("(cap * id) ; mul"), a);
      const Matrix rhs = evaluate(*parse_bord("id"), a);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-9);
    }
  }
  SUBCASE("ill-typed terms are rejected at evaluation") {
    CHECK_THROWS_AS(evaluate(*parse_bord("mul ; cap"), algebra_c()), GluingMismatch);
  }
}

TEST_CASE("the Frobenius relation suite") {
  const auto& relations = frobenius_relations();
  CHECK(relations.size() == 11);
  for (const auto& a : algebra_corpus()) {
    for (const auto& rel : relations) {
      CAPTURE(rel.name);
      const BordTermPtr lhs = parse_bord(rel.lhs);
      const BordTermPtr rhs = parse_bord(rel.rhs);
      // Equal boundary types and Euler characteristics on both sides.
      const auto tl = typecheck(*lhs);
      const auto tr = typecheck(*rhs);
      CHECK(tl.in == tr.in);
      CHECK(tl.out == tr.out);
      CHECK(euler_char(*lhs) == euler_char(*rhs));
      const Matrix ml = evaluate(*lhs, a);
      const Matrix mr = evaluate(*rhs, a);
      CHECK((ml - mr).cwiseAbs().maxCoeff() <= 1e-9);
    }
  }
}
