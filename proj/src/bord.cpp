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

#include <cctype>
#include <sstream>

namespace qcskit {

BordTermPtr BordTerm::make_atom(Generator g, int line, int col) {
  auto t = std::make_shared<BordTerm>();
  t->kind = Kind::Atom;
  t->atom = g;
  t->line = line;
  t->col = col;
  return t;
}

BordTermPtr BordTerm::make_seq(BordTermPtr a, BordTermPtr b, int line, int col) {
  auto t = std::make_shared<BordTerm>();
  t->kind = Kind::Seq;
  t->left = std::move(a);
  t->right = std::move(b);
  t->line = line;
  t->col = col;
  return t;
}

BordTermPtr BordTerm::make_par(BordTermPtr a, BordTermPtr b, int line, int col) {
  auto t = std::make_shared<BordTerm>();
  t->kind = Kind::Par;
  t->left = std::move(a);
  t->right = std::move(b);
  t->line = line;
  t->col = col;
  return t;
}

bool term_equal(const BordTerm& a, const BordTerm& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == BordTerm::Kind::Atom) return a.atom == b.atom;
  return term_equal(*a.left, *b.left) && term_equal(*a.right, *b.right);
}

BordParseError::BordParseError(std::string msg, int line_, int col_)
    : Error(std::move(msg)), line(line_), col(col_) {}

GluingMismatch::GluingMismatch(std::string msg, std::string path_, int line_, int col_)
    : Error(std::move(msg)), path(std::move(path_)), line(line_), col(col_) {}

namespace {

struct Token {
  enum class Kind { Atom, Semi, Star, LParen, RParen, End };
  Kind kind;
  Generator atom = Generator::Id;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space();
    const int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Token::Kind::End, Generator::Id, line, col};
    const char c = text_[pos_];
    if (c == ';') {
      advance();
      return {Token::Kind::Semi, Generator::Id, line, col};
    }
    if (c == '*') {
      advance();
      return {Token::Kind::Star, Generator::Id, line, col};
    }
    if (c == '(') {
      advance();
      return {Token::Kind::LParen, Generator::Id, line, col};
    }
    if (c == ')') {
      advance();
      return {Token::Kind::RParen, Generator::Id, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        word.push_back(text_[pos_]);
        advance();
      }
      Generator g;
      if (word == "cap")
        g = Generator::Cap;
      else if (word == "cup")
        g = Generator::Cup;
      else if (word == "mul")
        g = Generator::Mul;
      else if (word == "comul")
        g = Generator::Comul;
      else if (word == "id")
        g = Generator::Id;
      else if (word == "swap")
        g = Generator::Swap;
      else {
        std::ostringstream os;
        os << "lexical error at " << line << ":" << col << ": unknown word '" << word
           << "'; expected one of cap, cup, mul, comul, id, swap";
        throw BordParseError(os.str(), line, col);
      }
      return {Token::Kind::Atom, g, line, col};
    }
    std::ostringstream os;
    os << "lexical error at " << line << ":" << col << ": unexpected character '" << c << "'";
    throw BordParseError(os.str(), line, col);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { shift(); }

  BordTermPtr parse() {
    BordTermPtr t = term();
    if (cur_.kind != Token::Kind::End)
      fail("expected ';', '*', or end of input");
    return t;
  }

 private:
  BordTermPtr term() {
    BordTermPtr t = factor();
    while (cur_.kind == Token::Kind::Semi) {
      const Token op = cur_;
      shift();
      t = BordTerm::make_seq(t, factor(), op.line, op.col);
    }
    return t;
  }

  BordTermPtr factor() {
    BordTermPtr t = atom();
    while (cur_.kind == Token::Kind::Star) {
      const Token op = cur_;
      shift();
      t = BordTerm::make_par(t, atom(), op.line, op.col);
    }
    return t;
  }

  BordTermPtr atom() {
    if (cur_.kind == Token::Kind::Atom) {
      BordTermPtr t = BordTerm::make_atom(cur_.atom, cur_.line, cur_.col);
      shift();
      return t;
    }
    if (cur_.kind == Token::Kind::LParen) {
      shift();
      BordTermPtr t = term();
      if (cur_.kind != Token::Kind::RParen) fail("expected ')'");
      shift();
      return t;
    }
    fail("expected an atom (cap|cup|mul|comul|id|swap) or '('");
    return nullptr;  // unreachable
  }

  [[noreturn]] void fail(const std::string& expected) {
    std::ostringstream os;
    os << "syntax error at " << cur_.line << ":" << cur_.col << ": " << expected;
    throw BordParseError(os.str(), cur_.line, cur_.col);
  }

  void shift() { cur_ = lexer_.next(); }

  Lexer lexer_;
  Token cur_{Token::Kind::End, Generator::Id, 1, 1};
};

BoundaryType atom_type(Generator g) {
  switch (g) {
    case Generator::Cap: return {0, 1};
    case Generator::Cup: return {1, 0};
    case Generator::Mul: return {2, 1};
    case Generator::Comul: return {1, 2};
    case Generator::Id: return {1, 1};
    case Generator::Swap: return {2, 2};
  }
  return {0, 0};
}

BoundaryType typecheck_at(const BordTerm& term, const std::string& path) {
  switch (term.kind) {
    case BordTerm::Kind::Atom:
      return atom_type(term.atom);
    case BordTerm::Kind::Par: {
      const BoundaryType a = typecheck_at(*term.left, path + ".left");
      const BoundaryType b = typecheck_at(*term.right, path + ".right");
      return {a.in + b.in, a.out + b.out};
    }
    case BordTerm::Kind::Seq: {
      const BoundaryType a = typecheck_at(*term.left, path + ".left");
      const BoundaryType b = typecheck_at(*term.right, path + ".right");
      if (a.out != b.in) {
        std::ostringstream os;
        os << "gluing mismatch at " << term.line << ":" << term.col << " (" << path
           << "): left side ends in " << a.out << " circle(s) but right side expects " << b.in;
        throw GluingMismatch(os.str(), path, term.line, term.col);
      }
      return {a.in, b.out};
    }
  }
  throw Error("typecheck: unreachable");
}

}  // namespace

BordTermPtr parse_bord(const std::string& text) {
  if (text.size() > kMaxBordSource)
    throw BordParseError("input exceeds the 64 KiB source limit", 1, 1);
  return Parser(text).parse();
}

BoundaryType typecheck(const BordTerm& term) { return typecheck_at(term, "root"); }

int euler_char(const BordTerm& term) {
  switch (term.kind) {
    case BordTerm::Kind::Atom:
      return generator_euler(term.atom);
    case BordTerm::Kind::Seq:
    case BordTerm::Kind::Par:
      return euler_char(*term.left) + euler_char(*term.right);
  }
  return 0;
}

namespace {

void print_into(const BordTerm& t, std::ostringstream& os) {
  switch (t.kind) {
    case BordTerm::Kind::Atom:
      os << generator_name(t.atom);
      return;
    case BordTerm::Kind::Seq: {
      print_into(*t.left, os);  // left association: the left child never needs parens
      os << " ; ";
      const bool parens = t.right->kind == BordTerm::Kind::Seq;
      if (parens) os << "(";
      print_into(*t.right, os);
      if (parens) os << ")";
      return;
    }
    case BordTerm::Kind::Par: {
      const bool lp = t.left->kind == BordTerm::Kind::Seq;
      if (lp) os << "(";
      print_into(*t.left, os);
      if (lp) os << ")";
      os << " * ";
      const bool rp = t.right->kind != BordTerm::Kind::Atom;
      if (rp) os << "(";
      print_into(*t.right, os);
      if (rp) os << ")";
      return;
    }
  }
}

}  // namespace

std::string pretty_print(const BordTerm& term) {
  std::ostringstream os;
  print_into(term, os);
  return os.str();
}

namespace {

Matrix evaluate_typed(const BordTerm& term, const FrobeniusAlgebra& algebra) {
  switch (term.kind) {
    case BordTerm::Kind::Atom:
      return generator_matrix(algebra, term.atom).matrix;
    case BordTerm::Kind::Seq:
      return evaluate_typed(*term.right, algebra) * evaluate_typed(*term.left, algebra);
    case BordTerm::Kind::Par:
      return kron(evaluate_typed(*term.left, algebra), evaluate_typed(*term.right, algebra));
  }
  throw Error("evaluate: unreachable");
}

}  // namespace

Matrix evaluate(const BordTerm& term, const FrobeniusAlgebra& algebra) {
  typecheck(term);
  return evaluate_typed(term, algebra);
}

const std::vector<RelationPair>& frobenius_relations() {
  static const std::vector<RelationPair> relations = {
      {"associativity", "(mul * id) ; mul", "(id * mul) ; mul"},
      {"left-unit", "(cap * id) ; mul", "id"},
      {"right-unit", "(id * cap) ; mul", "id"},
      {"coassociativity", "comul ; (comul * id)", "comul ; (id * comul)"},
      {"left-counit", "comul ; (cup * id)", "id"},
      {"right-counit", "comul ; (id * cup)", "id"},
      {"frobenius-left", "(id * comul) ; (mul * id)", "mul ; comul"},
      {"frobenius-right", "(comul * id) ; (id * mul)", "mul ; comul"},
      {"commutativity", "swap ; mul", "mul"},
      {"cocommutativity", "comul ; swap", "comul"},
      {"swap-involution", "swap ; swap", "id * id"},
  };
  return relations;
}

Complex closed_surface_invariant(const FrobeniusAlgebra& algebra, int genus) {
  if (genus < 0) throw ValidationError("closed_surface_invariant: genus must be >= 0");
  std::string term = "cap";
  for (int i = 0; i < genus; ++i) term += " ; comul ; mul";
  term += " ; cup";
  const Matrix value = evaluate(*parse_bord(term), algebra);
  return value(0, 0);
}

}  // namespace qcskit
