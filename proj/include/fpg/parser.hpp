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

#ifndef FPG_PARSER_HPP
#define FPG_PARSER_HPP

#include <string>
#include <string_view>

#include "fpg/presentation.hpp"
#include "fpg/word.hpp"

namespace fpg {

/// Byte range into the input text, for diagnostics.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct parse_error : error {
  parse_error(const std::string& message, SourceSpan s)
      : error(message + " at bytes " + std::to_string(s.begin) + ".." +
              std::to_string(s.end)),
        span(s) {}
  SourceSpan span;
};

// Presentation text format (".grp"): whitespace-insensitive, '#' comments.
//
//   presentation := '<' genlist '|' rellist '>'
//   genlist      := [ident {',' ident}]
//   rellist      := [relation {',' relation}]
//   relation     := word ['=' word]        -- u = v is stored as u v^-1
//   word         := '1' | term {term}
//   term         := atom ['^' ['-'] digits]
//   atom         := ident | '[' word ',' word ']' | '(' word ')'
//   ident        := [A-Za-z][A-Za-z0-9_]*
//
// '[u,v]' expands to u v u^-1 v^-1 at parse time.
Presentation parse_presentation(std::string_view text);

Word parse_word(std::string_view text, const AlphabetPtr& alphabet);

/// Canonical text form; parse_presentation(serialize_presentation(p)) == p.
std::string serialize_presentation(const Presentation& p);

}  // namespace fpg

#endif  // FPG_PARSER_HPP
