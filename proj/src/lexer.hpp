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

// Internal tokenizer shared by the presentation and proof-script parsers.

#ifndef FPG_LEXER_HPP
#define FPG_LEXER_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "fpg/parser.hpp"

namespace fpg {

enum class TokenKind {
  End,
  Lt,        // <
  Gt,        // >
  Pipe,      // |
  Comma,     // ,
  Equals,    // =
  Caret,     // ^
  Minus,     // -
  Colon,     // :
  LBracket,  // [
  RBracket,  // ]
  LParen,    // (
  RParen,    // )
  Ident,
  Number,
};

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  Token expect(TokenKind kind, const char* what) {
    if (current_.kind != kind)
      throw parse_error(std::string("expected ") + what, current_.span);
    return next();
  }

 private:
  void advance() {
    skip_blank();
    std::size_t begin = pos_;
    if (pos_ >= text_.size()) {
      current_ = {TokenKind::End, "", {begin, begin}};
      return;
    }
    char c = text_[pos_];
    auto single = [&](TokenKind k) {
      ++pos_;
      current_ = {k, std::string(1, c), {begin, pos_}};
    };
    switch (c) {
      case '<': return single(TokenKind::Lt);
      case '>': return single(TokenKind::Gt);
      case '|': return single(TokenKind::Pipe);
      case ',': return single(TokenKind::Comma);
      case '=': return single(TokenKind::Equals);
      case '^': return single(TokenKind::Caret);
      case '-': return single(TokenKind::Minus);
      case ':': return single(TokenKind::Colon);
      case '[': return single(TokenKind::LBracket);
      case ']': return single(TokenKind::RBracket);
      case '(': return single(TokenKind::LParen);
      case ')': return single(TokenKind::RParen);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      current_ = {TokenKind::Number, std::string(text_.substr(begin, pos_ - begin)),
                  {begin, pos_}};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      current_ = {TokenKind::Ident, std::string(text_.substr(begin, pos_ - begin)),
                  {begin, pos_}};
      return;
    }
    throw parse_error("unexpected character", SourceSpan{begin, begin + 1});
  }

  void skip_blank() {
    for (;;) {
      while (pos_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      return;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{TokenKind::End, "", {0, 0}};
};

// Parses a word with the shared grammar; an ident equal to stop_word ends
// the word instead of being read as a generator (contextual keyword).
Word parse_word_at(Lexer& lex, const AlphabetPtr& alphabet,
                   const char* stop_word);

}  // namespace fpg

#endif  // FPG_LEXER_HPP
