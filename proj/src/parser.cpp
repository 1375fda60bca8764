// Copyright 2026 The fpg Authors
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

#include "fpg/parser.hpp"

#include <cctype>
#include <limits>

#include "lexer.hpp"

namespace fpg {

namespace {

class WordParser {
 public:
  WordParser(Lexer& lex, const AlphabetPtr& alphabet)
      : lex_(lex), alphabet_(alphabet) {}

  // word := '1' | term {term}. Stops at any token that cannot start a term;
  // idents listed in stop_words_ also terminate (contextual keywords).
  Word parse(const char* stop_word = nullptr) {
    const Token& t = lex_.peek();
    if (t.kind == TokenKind::Number) {
      if (t.text != "1")
        throw parse_error("expected a word ('1' denotes the empty word)",
                          t.span);
      lex_.next();
      return Word(alphabet_);
    }
    Word acc(alphabet_);
    bool any = false;
    while (starts_term(lex_.peek(), stop_word)) {
      acc = multiply(acc, parse_term(stop_word));
      any = true;
    }
    if (!any)
      throw parse_error("expected a word", lex_.peek().span);
    return acc;
  }

 private:
  static bool starts_term(const Token& t, const char* stop_word) {
    if (t.kind == TokenKind::Ident)
      return stop_word == nullptr || t.text != stop_word;
    return t.kind == TokenKind::LBracket || t.kind == TokenKind::LParen;
  }

  Word parse_term(const char* stop_word) {
    Word base = parse_atom(stop_word);
    if (lex_.peek().kind != TokenKind::Caret) return base;
    lex_.next();
    bool negative = false;
    if (lex_.peek().kind == TokenKind::Minus) {
      negative = true;
      lex_.next();
    }
    const Token num = lex_.expect(TokenKind::Number, "exponent");
    long value = 0;
    for (char c : num.text) {
      value = value * 10 + (c - '0');
      if (value > kMaxExponent)
        throw parse_error("exponent out of range", num.span);
    }
    return pow(base, negative ? -value : value);
  }

  Word parse_atom(const char* stop_word) {
    const Token t = lex_.next();
    switch (t.kind) {
      case TokenKind::Ident: {
        auto idx = alphabet_->index(t.text);
        if (!idx)
          throw parse_error("unknown generator '" + t.text + "'", t.span);
        return Word(alphabet_, {{*idx, 1}});
      }
      case TokenKind::LBracket: {
        Word u = parse(stop_word);
        lex_.expect(TokenKind::Comma, "',' in commutator");
        Word v = parse(stop_word);
        lex_.expect(TokenKind::RBracket, "']'");
        return commutator(u, v);
      }
      case TokenKind::LParen: {
        Word w = parse(stop_word);
        lex_.expect(TokenKind::RParen, "')'");
        return w;
      }
      default:
        throw parse_error("expected a generator, '[' or '('", t.span);
    }
  }

  Lexer& lex_;
  const AlphabetPtr& alphabet_;
};

}  // namespace

Word parse_word_at(Lexer& lex, const AlphabetPtr& alphabet,
                   const char* stop_word) {
  return WordParser(lex, alphabet).parse(stop_word);
}

Presentation parse_presentation(std::string_view text) {
  Lexer lex(text);
  lex.expect(TokenKind::Lt, "'<'");

  std::vector<std::string> names;
  while (lex.peek().kind == TokenKind::Ident) {
    const Token t = lex.next();
    for (const auto& n : names)
      if (n == t.text)
        throw parse_error("duplicate generator '" + t.text + "'", t.span);
    names.push_back(t.text);
    if (lex.peek().kind == TokenKind::Comma)
      lex.next();
    else
      break;
  }
  AlphabetPtr alphabet = make_alphabet(std::move(names));
  lex.expect(TokenKind::Pipe, "'|'");

  std::vector<Word> relators;
  if (lex.peek().kind != TokenKind::Gt) {
    for (;;) {
      WordParser wp(lex, alphabet);
      Word lhs = wp.parse();
      if (lex.peek().kind == TokenKind::Equals) {
        lex.next();
        Word rhs = wp.parse();
        lhs = multiply(lhs, invert(rhs));
      }
      relators.push_back(std::move(lhs));
      if (lex.peek().kind == TokenKind::Comma)
        lex.next();
      else
        break;
    }
  }
  lex.expect(TokenKind::Gt, "'>'");
  const Token& trailing = lex.peek();
  if (trailing.kind != TokenKind::End)
    throw parse_error("trailing input after presentation", trailing.span);
  return Presentation(std::move(alphabet), std::move(relators));
}

Word parse_word(std::string_view text, const AlphabetPtr& alphabet) {
  Lexer lex(text);
  Word w = WordParser(lex, alphabet).parse();
  const Token& trailing = lex.peek();
  if (trailing.kind != TokenKind::End)
    throw parse_error("trailing input after word", trailing.span);
  return w;
}

std::string serialize_presentation(const Presentation& p) {
  std::string out = "<";
  const auto& names = p.alphabet()->names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += names[i];
  }
  out += names.empty() ? " |" : " |";
  if (p.num_relators() == 0) {
    out += " >";
    return out;
  }
  out += "\n";
  for (std::size_t i = 0; i < p.num_relators(); ++i) {
    out += "  " + to_string(p.relator(i));
    out += i + 1 < p.num_relators() ? ",\n" : "\n";
  }
  out += ">";
  return out;
}

}  // namespace fpg
