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

#include "fpg/word.hpp"

#include <doctest.h>

#include <random>

#include "fpg/parser.hpp"

using namespace fpg;

namespace {

AlphabetPtr abc() {
  static AlphabetPtr a = make_alphabet({"a", "b", "c"});
  return a;
}

Word W(const char* text) { return parse_word(text, abc()); }

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> gen(0, 2);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> ls;
  for (std::size_t i = len(rng); i > 0; --i)
    ls.push_back({gen(rng), static_cast<std::int8_t>(sign(rng) ? 1 : -1)});
  return Word::raw(abc(), std::move(ls));
}

}  // namespace

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(make_alphabet({"a", "a"}), error);
  CHECK_THROWS_AS(make_alphabet({"1bad"}), error);
  CHECK_THROWS_AS(make_alphabet({""}), error);
  AlphabetPtr al = make_alphabet({"a", "t1", "long_name"});
  CHECK(al->index("t1") == 1);
  CHECK(!al->index("missing"));
}

TEST_CASE("reduction") {
  CHECK(W("a a^-1").empty());
  CHECK(W("a b b^-1 a") == W("a a"));
  CHECK(W("a b") == W("a b"));  // already reduced
  // nested cancellation collapses fully
  CHECK(W("a b c c^-1 b^-1 a^-1").empty());
}

TEST_CASE("multiply") {
  CHECK(multiply(W("a"), W("a^-1")).empty());
  CHECK(multiply(W("a b"), W("b^-1 c")) == W("a c"));
  Word other(make_alphabet({"x"}), {{0, 1}});
  CHECK_THROWS_AS(multiply(W("a"), other), alphabet_error);
}

TEST_CASE("invert") {
  CHECK(invert(W("a b")) == W("b^-1 a^-1"));
  CHECK(invert(W("1")).empty());
  CHECK(multiply(W("a b c"), invert(W("a b c"))).empty());
}

TEST_CASE("commutator convention") {
  CHECK(commutator(W("a"), W("a")).empty());
  CHECK(commutator(W("a"), W("b")) == W("a b a^-1 b^-1"));
  CHECK(invert(commutator(W("a"), W("b"))) == commutator(W("b"), W("a")));
  Word other(make_alphabet({"x"}), {{0, 1}});
  CHECK_THROWS_AS(commutator(W("a"), other), alphabet_error);
}

TEST_CASE("substitute") {
  AlphabetPtr al = make_alphabet({"a", "f", "g"});
  Word af = parse_word("a f", al);
  CHECK(substitute(af, 1, parse_word("a^-1", al)).empty());
  CHECK(substitute(parse_word("g", al), 1, parse_word("a^-1", al)) ==
        parse_word("g", al));
  CHECK_THROWS_AS(substitute(af, 1, parse_word("a f a^-1", al)),
                  substitution_error);
}

TEST_CASE("substitution matches hand elimination") {
  AlphabetPtr al = make_alphabet({"a", "c", "d", "q"});
  Word w = parse_word("a q a^-1 d^-1", al);
  Word r = parse_word("c q", al);
  CHECK(substitute(w, 2, r) == parse_word("a q a^-1 q^-1 c^-1", al));
  // i.e. the relator becomes [a,q] c^-1, fixing the commutator convention
  CHECK(substitute(w, 2, r) ==
        multiply(commutator(parse_word("a", al), parse_word("q", al)),
                 parse_word("c^-1", al)));
  // building and inverting relator words
  CHECK(multiply(parse_word("c q", al), parse_word("d^-1", al)) ==
        parse_word("c q d^-1", al));
  CHECK(invert(w) == parse_word("d a q^-1 a^-1", al));
}

TEST_CASE("cyclic reduction") {
  auto [core, conj] = cyclic_reduce(W("a b a^-1"));
  CHECK(core == W("b"));
  CHECK(conj == W("a"));
  auto [ecore, econj] = cyclic_reduce(W("1"));
  CHECK(ecore.empty());
  CHECK(econj.empty());
  // already cyclically reduced words are fixed points
  auto [fcore, fconj] = cyclic_reduce(W("a b"));
  CHECK(fcore == W("a b"));
  CHECK(fconj.empty());
}

TEST_CASE("word properties, randomized") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::uint32_t> gen(0, 2);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < 2000; ++i) {
    Word w = reduce(random_word(rng, 14));
    CHECK(reduce(w) == w);

    // confluence: a cancelling pair inserted anywhere reduces away
    std::uniform_int_distribution<std::size_t> pos(0, w.size());
    const std::size_t at = pos(rng);
    Letter l{gen(rng), static_cast<std::int8_t>(sign(rng) ? 1 : -1)};
    std::vector<Letter> spliced(w.letters().begin(),
                                w.letters().begin() + at);
    spliced.push_back(l);
    spliced.push_back(l.inverse());
    spliced.insert(spliced.end(), w.letters().begin() + at,
                   w.letters().end());
    CHECK(reduce(Word::raw(abc(), spliced)) == w);

    Word u = reduce(random_word(rng, 10));
    Word v = reduce(random_word(rng, 10));
    CHECK(invert(multiply(u, v)) == multiply(invert(v), invert(u)));

    Word x = reduce(random_word(rng, 8));
    CHECK(multiply(multiply(u, v), x) == multiply(u, multiply(v, x)));

    auto [core, conj] = cyclic_reduce(w);
    CHECK(multiply(conj, multiply(core, invert(conj))) == w);
    // core is cyclically reduced
    if (core.size() >= 2) {
      const auto& ls = core.letters();
      CHECK_FALSE((ls.front().gen == ls.back().gen &&
                   ls.front().sign != ls.back().sign));
    }
  }
}

TEST_CASE("to_string collapses runs") {
  CHECK(to_string(W("a a a")) == "a^3");
  CHECK(to_string(W("a b^-1 b^-1")) == "a b^-2");
  CHECK(to_string(W("1")) == "1");
}
