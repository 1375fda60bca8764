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

#include <doctest.h>

#include <random>

using namespace fpg;

TEST_CASE("basic presentations") {
  Presentation p = parse_presentation("< a | a^3 >");
  CHECK(p.num_generators() == 1);
  REQUIRE(p.num_relators() == 1);
  CHECK(to_string(p.relator(0)) == "a^3");

  Presentation q = parse_presentation("< a, e | [a,e] = 1 >");
  REQUIRE(q.num_relators() == 1);
  CHECK(q.relator(0) == parse_word("a e a^-1 e^-1", q.alphabet()));

  Presentation r =
      parse_presentation("< a,c,e,g,h,q | [q^-1,c][g^-1,e] = 1 >");
  CHECK(r.relator(0) ==
        parse_word("q^-1 c q c^-1 g^-1 e g e^-1", r.alphabet()));
}

TEST_CASE("trivial and empty forms") {
  Presentation p = parse_presentation("< | >");
  CHECK(p.num_generators() == 0);
  CHECK(p.num_relators() == 0);
  CHECK(serialize_presentation(p) == "< | >");

  // a relation that reduces to nothing is dropped
  Presentation q = parse_presentation("< a | a a^-1 >");
  CHECK(q.num_relators() == 0);

  Presentation r = parse_presentation("< a, b | >");
  CHECK(r.num_generators() == 2);
}

TEST_CASE("words") {
  AlphabetPtr al = make_alphabet({"a", "b", "x", "y", "e"});
  CHECK(parse_word("1", al).empty());
  CHECK(parse_word("(a b)^-2", al) == parse_word("b^-1 a^-1 b^-1 a^-1", al));
  CHECK(parse_word("e^-1 y x^-1", al) ==
        Word(al, {{4, -1}, {3, 1}, {2, -1}}));
  CHECK(parse_word("a^0", al).empty());
  CHECK(parse_word("[a, b]^2", al) ==
        parse_word("a b a^-1 b^-1 a b a^-1 b^-1", al));
}

TEST_CASE("comments and whitespace") {
  Presentation p = parse_presentation(
      "# header comment\n< a , b |\n  a b, # inline\n  b^2\n>\n");
  CHECK(p.num_relators() == 2);
}

TEST_CASE("errors carry spans") {
  auto expect_error = [](const char* text) {
    try {
      (void)parse_presentation(text);
      FAIL_CHECK("expected parse_error for " << text);
    } catch (const parse_error& e) {
      CHECK(e.span.end <= std::string(text).size() + 1);
    }
  };
  expect_error("< a | b >");          // unknown generator
  expect_error("< a, a | >");         // duplicate generator
  expect_error("< a | a^ >");         // missing exponent
  expect_error("< a | (a >");         // unbalanced paren
  expect_error("< a | [a a] >");      // missing comma
  expect_error("< a | a > rest");     // trailing input
  expect_error("");                   // empty input
  expect_error("< a | a, >");         // dangling comma
}

TEST_CASE("round trip is the identity on values") {
  const char* texts[] = {
      "< | >",
      "< a | a^3 >",
      "< a, b | a b^-1, [a,b] = 1, (a b)^2 >",
      "< a, c, e, g, h, q | [c^-1,a] = c q, q^2 = e q e^-1 q e >",
  };
  for (const char* t : texts) {
    Presentation p = parse_presentation(t);
    Presentation again = parse_presentation(serialize_presentation(p));
    CHECK(again == p);
    // canonicalization is idempotent on its image
    CHECK(serialize_presentation(again) == serialize_presentation(p));
  }
}

TEST_CASE("fuzzing never escapes parse_error") {
  std::mt19937_64 rng(99);
  const std::string charset = "<>|,=^-[]()ab maybe01#\n";
  for (int i = 0; i < 500; ++i) {
    std::string input;
    std::uniform_int_distribution<std::size_t> len(0, 60);
    std::uniform_int_distribution<std::size_t> pick(0, charset.size() - 1);
    for (std::size_t k = len(rng); k > 0; --k) input += charset[pick(rng)];
    try {
      (void)parse_presentation(input);
    } catch (const parse_error&) {
      // expected failure mode
    }
  }
}
