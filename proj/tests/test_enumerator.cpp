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

#include "fpg/enumerator.hpp"

#include <doctest.h>

#include <random>

#include "fpg/abelian.hpp"
#include "fpg/oracle.hpp"
#include "fpg/parser.hpp"

using namespace fpg;

TEST_CASE("cyclic groups") {
  for (std::size_t n = 1; n <= 6; ++n) {
    Presentation p =
        parse_presentation(("< a | a^" + std::to_string(n) + " >").c_str());
    EnumerationResult r = enumerate(p);
    REQUIRE(r.completed);
    CHECK(r.index == n);
    CHECK(verify_table(r.table, p).ok);
  }
}

TEST_CASE("symmetric group on three points") {
  Presentation p = parse_presentation("< a, b | a^2, b^2, (a b)^3 >");
  EnumerationResult r = enumerate(p);
  REQUIRE(r.completed);
  CHECK(r.index == 6);
  CHECK(verify_table(r.table, p).ok);
}

TEST_CASE("quaternion group") {
  Presentation p =
      parse_presentation("< a, b | a^4, a^2 b^-2, b^-1 a b a >");
  EnumerationResult r = enumerate(p);
  REQUIRE(r.completed);
  CHECK(r.index == 8);
}

TEST_CASE("subgroup index") {
  Presentation p = parse_presentation("< a, b | a^2, b^2, (a b)^3 >");
  EnumerationResult r =
      enumerate(p, {parse_word("a", p.alphabet())});
  REQUIRE(r.completed);
  CHECK(r.index == 3);
}

TEST_CASE("free group exhausts the limits") {
  Presentation p = parse_presentation("< a, b | >");
  EnumerationResult r = enumerate(p, {}, {100, 100});
  CHECK_FALSE(r.completed);
  CHECK(r.defined_cosets >= 100);
}

TEST_CASE("limits are not an error and stats are deterministic") {
  Presentation p = parse_presentation("< a, b | a^2, b^2, (a b)^3 >");
  EnumerationResult r1 = enumerate(p);
  EnumerationResult r2 = enumerate(p);
  CHECK(r1.stats == r2.stats);
  CHECK(r1.defined_cosets == r2.defined_cosets);
}

TEST_CASE("trivial one-relator table") {
  Presentation p = parse_presentation("< a | a >");
  EnumerationResult r = enumerate(p);
  REQUIRE(r.completed);
  CHECK(r.index == 1);
  CHECK(verify_table(r.table, p).ok);
  CHECK(r.table.num_live() == 1);
}

TEST_CASE("verify_table rejects corrupted tables") {
  Presentation p = parse_presentation("< a, b | a^2, b^2, (a b)^3 >");
  EnumerationResult r = enumerate(p);
  REQUIRE(r.completed);

  // round-trip through the dump format
  std::string dump = r.table.dump(*p.alphabet());
  CosetTable reloaded = CosetTable::parse_table(dump, *p.alphabet());
  CHECK(verify_table(reloaded, p).ok);

  // corrupt one action entry
  std::vector<std::size_t> live = r.table.live_cosets();
  CosetTable bad = reloaded;
  bad.set_entry(live[0], 0, static_cast<std::int64_t>(live[1]) == bad.entry(live[0], 0)
                                ? static_cast<std::int64_t>(live[2])
                                : static_cast<std::int64_t>(live[1]));
  TableVerification v = verify_table(bad, p);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.diagnostic.empty());
}

TEST_CASE("coincidence processing never raises the live count") {
  CosetTable t(2);
  for (int i = 0; i < 40; ++i) t.define(0, 0);
  std::mt19937_64 rng(7);
  std::size_t live_before = t.num_live();
  for (int i = 0; i < 30; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, t.num_defined() - 1);
    std::size_t a = t.representative(pick(rng));
    std::size_t b = t.representative(pick(rng));
    t.coincide(a, b);
    CHECK(t.num_live() <= live_before);
    live_before = t.num_live();
  }
}

TEST_CASE("enumerate rejects foreign subgroup words") {
  Presentation p = parse_presentation("< a | a^2 >");
  AlphabetPtr other = make_alphabet({"z"});
  CHECK_THROWS_AS(enumerate(p, {Word(other, {{0, 1}})}), alphabet_error);
}

TEST_CASE("randomized small presentations agree with the models oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> ngen(1, 3), extra(0, 2), len(1, 6),
      power(1, 4), sign(0, 1);
  int compared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<std::string> names;
    const int k = ngen(rng);
    for (int g = 0; g < k; ++g) names.push_back(std::string(1, 'a' + g));
    AlphabetPtr al = make_alphabet(names);
    std::vector<Word> relators;
    // power relators bias the family toward finite groups
    for (int g = 0; g < k; ++g) {
      std::vector<Letter> ls(power(rng),
                             {static_cast<std::uint32_t>(g), 1});
      relators.emplace_back(al, std::move(ls));
    }
    for (int i = extra(rng); i > 0; --i) {
      std::vector<Letter> ls;
      for (int j = len(rng); j > 0; --j)
        ls.push_back({static_cast<std::uint32_t>(
                          std::uniform_int_distribution<int>(0, k - 1)(rng)),
                      static_cast<std::int8_t>(sign(rng) ? 1 : -1)});
      relators.emplace_back(al, std::move(ls));
    }
    Presentation p(al, relators);
    EnumerationResult r = enumerate(p, {}, {50'000, 50'000});
    if (!r.completed || r.index > 12) continue;  // oracle bound
    ++compared;
    CHECK(r.index == oracle::max_quotient_order(p));
  }
  CHECK(compared > 40);  // the family must actually exercise the oracle
}
