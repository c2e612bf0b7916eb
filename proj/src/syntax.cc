// Copyright 2026 The Verity Authors.
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

#include "verity/syntax.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "verity/error.h"

namespace verity {
namespace {

enum class Tok {
  kIdent,
  kNumber,
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kComma,
  kColon,
  kAnd,
  kOr,
  kNot,
  kArrow,
  kLt,
  kLe,
  kEq,
  kGe,
  kGt,
  kMinus,
  kSlash,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// `#` comments are stripped only when `comments` is set (schema sources).
std::vector<Token> tokenize(std::string_view text, bool comments) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t len) {
    tokens.push_back({kind, std::string(text.substr(i, len)), line, column});
    i += len;
    column += static_cast<int>(len);
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++column;
      continue;
    }
    if (comments && c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    char next = i + 1 < text.size() ? text[i + 1] : '\0';
    if (ident_start(c)) {
      std::size_t len = 1;
      while (i + len < text.size() && ident_char(text[i + len])) ++len;
      push(Tok::kIdent, len);
      continue;
    }
    if (digit(c)) {
      std::size_t len = 1;
      while (i + len < text.size() && digit(text[i + len])) ++len;
      if (i + len + 1 < text.size() && text[i + len] == '.' &&
          digit(text[i + len + 1])) {
        ++len;
        while (i + len < text.size() && digit(text[i + len])) ++len;
      }
      push(Tok::kNumber, len);
      continue;
    }
    switch (c) {
      case '(': push(Tok::kLParen, 1); continue;
      case ')': push(Tok::kRParen, 1); continue;
      case '{': push(Tok::kLBrace, 1); continue;
      case '}': push(Tok::kRBrace, 1); continue;
      case ',': push(Tok::kComma, 1); continue;
      case ':': push(Tok::kColon, 1); continue;
      case '&': push(Tok::kAnd, 1); continue;
      case '|': push(Tok::kOr, 1); continue;
      case '!': push(Tok::kNot, 1); continue;
      case '/': push(Tok::kSlash, 1); continue;
      case '=': push(Tok::kEq, 1); continue;
      case '-':
        push(next == '>' ? Tok::kArrow : Tok::kMinus, next == '>' ? 2 : 1);
        continue;
      case '<':
        push(next == '=' ? Tok::kLe : Tok::kLt, next == '=' ? 2 : 1);
        continue;
      case '>':
        push(next == '=' ? Tok::kGe : Tok::kGt, next == '=' ? 2 : 1);
        continue;
      default:
        throw Error(ErrorCode::kSyntax,
                    "unexpected character '" + std::string(1, c) + "'", line,
                    column);
    }
  }
  tokens.push_back({Tok::kEnd, "", line, column});
  return tokens;
}

std::string describe(const Token& t) {
  return t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  Token take() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (!at(kind)) return false;
    take();
    return true;
  }
  Token expect(Tok kind, std::string_view what) {
    if (!at(kind)) fail("expected " + std::string(what));
    return take();
  }
  [[noreturn]] void fail(const std::string& message) const {
    fail(ErrorCode::kSyntax, message + ", found " + describe(peek()), peek());
  }
  [[noreturn]] static void fail(ErrorCode code, const std::string& message,
                                const Token& at) {
    throw Error(code,
                std::to_string(at.line) + ":" + std::to_string(at.column) +
                    ": " + message,
                at.line, at.column);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Schema& schema)
      : cursor_(tokenize(text, false)), schema_(schema) {}

  Formula parse() {
    Formula f = implication();
    if (!cursor_.at(Tok::kEnd)) cursor_.fail("expected end of formula");
    return f;
  }

 private:
  Formula implication() {
    Formula lhs = disjunction();
    if (cursor_.accept(Tok::kArrow)) return implies(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (cursor_.accept(Tok::kOr)) f = disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (cursor_.accept(Tok::kAnd)) f = conj(f, unary());
    return f;
  }

  Formula unary() {
    if (cursor_.accept(Tok::kNot)) return negate(unary());
    return primary();
  }

  Formula primary() {
    if (cursor_.accept(Tok::kLParen)) {
      Formula f = implication();
      cursor_.expect(Tok::kRParen, "')'");
      return f;
    }
    if (cursor_.at(Tok::kIdent) && cursor_.peek(1).kind != Tok::kLParen) {
      if (cursor_.peek().text == "true") {
        cursor_.take();
        return truth(true);
      }
      if (cursor_.peek().text == "false") {
        cursor_.take();
        return truth(false);
      }
    }
    return atom();
  }

  Formula atom() {
    Token attr = cursor_.expect(Tok::kIdent, "attribute, 'true', 'false' or '('");
    cursor_.expect(Tok::kLParen, "'(' after attribute name");
    Token entity = cursor_.expect(Tok::kIdent, "entity name");
    cursor_.expect(Tok::kRParen, "')' after entity name");
    Token op = cursor_.peek();
    Cmp cmp;
    switch (op.kind) {
      case Tok::kLt: cmp = Cmp::kLt; break;
      case Tok::kLe: cmp = Cmp::kLe; break;
      case Tok::kEq: cmp = Cmp::kEq; break;
      case Tok::kGe: cmp = Cmp::kGe; break;
      case Tok::kGt: cmp = Cmp::kGt; break;
      default: cursor_.fail("expected comparison operator");
    }
    cursor_.take();

    if (schema_.is_categorical(attr.text)) {
      if (cmp != Cmp::kEq) {
        Cursor::fail(ErrorCode::kNumericComparisonOnCategorical,
                     "ordering comparison on categorical attribute '" +
                         attr.text + "'",
                     op);
      }
      if (cursor_.at(Tok::kNumber) || cursor_.at(Tok::kMinus)) {
        Cursor::fail(ErrorCode::kNumericComparisonOnCategorical,
                     "categorical attribute '" + attr.text +
                         "' compared with a number",
                     cursor_.peek());
      }
      Token value = cursor_.expect(Tok::kIdent, "domain value");
      if (!schema_.value_index(attr.text, value.text)) {
        Cursor::fail(ErrorCode::kValueNotInDomain,
                     "value '" + value.text + "' is not in the domain of '" +
                         attr.text + "'",
                     value);
      }
      return make_atom(CatAtom{attr.text, entity.text, value.text});
    }
    if (schema_.is_numeric(attr.text)) {
      if (cursor_.at(Tok::kIdent)) {
        Cursor::fail(ErrorCode::kCategoricalValueOnNumeric,
                     "numeric attribute '" + attr.text +
                         "' compared with value '" + cursor_.peek().text + "'",
                     cursor_.peek());
      }
      return make_atom(NumAtom{attr.text, entity.text, cmp, number()});
    }
    Cursor::fail(ErrorCode::kUnknownAttribute,
                 "unknown attribute '" + attr.text + "'", attr);
  }

  Rational number() {
    std::string text;
    if (cursor_.accept(Tok::kMinus)) text = "-";
    text += cursor_.expect(Tok::kNumber, "number").text;
    if (cursor_.accept(Tok::kSlash)) {
      text += "/" + cursor_.expect(Tok::kNumber, "denominator").text;
    }
    Rational value;
    if (!parse_rational(text, &value)) {
      cursor_.fail("malformed number '" + text + "'");
    }
    return value;
  }

  Cursor cursor_;
  const Schema& schema_;
};

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kImplies: return 1;
    case Formula::Kind::kOr: return 2;
    case Formula::Kind::kAnd: return 3;
    default: return 4;
  }
}

void print(const Formula& f, std::string* out) {
  switch (f.kind()) {
    case Formula::Kind::kTrue: *out += "true"; return;
    case Formula::Kind::kFalse: *out += "false"; return;
    case Formula::Kind::kAtom: *out += print_atom(f.atom()); return;
    case Formula::Kind::kNot:
      *out += "!(";
      print(f.left(), out);
      *out += ")";
      return;
    default: break;
  }
  const int prec = precedence(f);
  const bool right_assoc = f.kind() == Formula::Kind::kImplies;
  auto child = [&](const Formula& c, bool needs_parens) {
    if (needs_parens) *out += "(";
    print(c, out);
    if (needs_parens) *out += ")";
  };
  int lp = precedence(f.left());
  int rp = precedence(f.right());
  child(f.left(), lp < prec || (right_assoc && lp == prec));
  switch (f.kind()) {
    case Formula::Kind::kAnd: *out += " & "; break;
    case Formula::Kind::kOr: *out += " | "; break;
    default: *out += " -> "; break;
  }
  child(f.right(), rp < prec || (!right_assoc && rp == prec));
}

}  // namespace

Schema parse_schema(std::string_view text) {
  Schema schema;
  Cursor cursor(tokenize(text, true));
  while (!cursor.at(Tok::kEnd)) {
    Token keyword = cursor.expect(Tok::kIdent, "'attr' or 'num'");
    Token name = cursor.expect(Tok::kIdent, "attribute name");
    if (name.line != keyword.line) {
      Cursor::fail(ErrorCode::kSyntax, "attribute name must follow '" +
                                           keyword.text + "' on the same line",
                   name);
    }
    try {
      if (keyword.text == "num") {
        schema.add_numeric(name.text);
        continue;
      }
      if (keyword.text != "attr") {
        Cursor::fail(ErrorCode::kSyntax,
                     "expected 'attr' or 'num', found '" + keyword.text + "'",
                     keyword);
      }
      cursor.expect(Tok::kColon, "':'");
      cursor.expect(Tok::kLBrace, "'{'");
      std::vector<std::string> values;
      do {
        Token value = cursor.expect(Tok::kIdent, "value name");
        values.push_back(value.text);
      } while (cursor.accept(Tok::kComma));
      Token close = cursor.expect(Tok::kRBrace, "',' or '}'");
      if (close.line != keyword.line) {
        Cursor::fail(ErrorCode::kSyntax,
                     "declaration of '" + name.text + "' spans several lines",
                     close);
      }
      schema.add_categorical(name.text, values);
    } catch (const Error& e) {
      if (e.line() != 0) throw;
      Cursor::fail(e.code(), e.what(), name);
    }
  }
  return schema;
}

Schema load_schema(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read schema '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_schema(text.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ":" + e.what(), e.line(), e.column());
  }
}

Formula parse_formula(std::string_view text, const Schema& schema) {
  return FormulaParser(text, schema).parse();
}

std::string print_atom(const Atom& a) {
  if (const auto* cat = std::get_if<CatAtom>(&a)) {
    return format_key(cat->key()) + "=" + cat->value;
  }
  const auto& num = std::get<NumAtom>(a);
  return format_key(num.key()) + " " + std::string(cmp_symbol(num.cmp)) + " " +
         format_rational(num.constant);
}

std::string print_formula(const Formula& f) {
  std::string out;
  print(f, &out);
  return out;
}

}  // namespace verity
