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

#include "fpg/proofcheck.hpp"

#include <doctest.h>

#include "fpg/abelian.hpp"
#include "fpg/parser.hpp"

using namespace fpg;

namespace {

Presentation klein() {
  return parse_presentation("< a, b | a^2, b^2, [a,b] >");
}

}  // namespace

TEST_CASE("free equality needs no certificate") {
  Presentation p = klein();
  ProofScript s = parse_proof("step t: a = a b b^-1", p);
  ScriptReport r = check_script(s);
  CHECK(r.all_accepted);
  CHECK_FALSE(r.proves_trivial);
}

TEST_CASE("a single conjugated relator certifies its identity") {
  Presentation p = klein();
  // a^2 = 1, so a = a^-1
  ProofScript s = parse_proof("step inv: a = a^-1 via conj(a^-1, r1)", p);
  CHECK(check_script(s).all_accepted);
}

TEST_CASE("steps may cite earlier steps") {
  Presentation p = klein();
  const char* text =
      "step inv: a = a^-1 via conj(a^-1, r1)\n"
      "step sq: a^2 = 1 via conj(1, r1)\n"
      "step both: a^3 = a^-1 via conj(1, sq), conj(1, inv)\n";
  ProofScript s = parse_proof(text, p);
  ScriptReport r = check_script(s);
  CHECK(r.all_accepted);
}

TEST_CASE("rejection carries the residual word") {
  Presentation p = klein();
  ProofScript s = parse_proof("step bad: a = b via conj(1, r1)", p);
  ScriptReport r = check_script(s);
  CHECK_FALSE(r.all_accepted);
  CHECK_FALSE(r.verdicts[0].accepted);
  CHECK_FALSE(r.verdicts[0].residual.empty());
}

TEST_CASE("a rejected step does not poison later steps") {
  Presentation p = klein();
  const char* text =
      "step bad: a = b via conj(1, r2)\n"          // wrong certificate
      "step uses_bad: a b^-1 = 1 via conj(1, bad)\n";  // cites the statement
  ScriptReport r = check_script(parse_proof(text, p));
  CHECK_FALSE(r.verdicts[0].accepted);
  CHECK(r.verdicts[1].accepted);
  CHECK_FALSE(r.all_accepted);
}

TEST_CASE("empty script is accepted and proves nothing") {
  ScriptReport r = check_script(parse_proof("", klein()));
  CHECK(r.all_accepted);
  CHECK_FALSE(r.proves_trivial);
  CHECK(r.verdicts.empty());
}

TEST_CASE("triviality requires killing every generator") {
  Presentation p = parse_presentation("< a, b | a, b a >");
  const char* text =
      "step a1: a = 1 via conj(1, r1)\n"
      "step b1: b = 1 via conj(1, r2), conj(1, a1)^-1\n";
  ScriptReport r = check_script(parse_proof(text, p));
  CHECK(r.all_accepted);
  CHECK(r.proves_trivial);

  // dropping one of the two leaves the claim unproved
  ScriptReport partial =
      check_script(parse_proof("step a1: a = 1 via conj(1, r1)\n", p));
  CHECK(partial.all_accepted);
  CHECK_FALSE(partial.proves_trivial);
}

TEST_CASE("script parser rejects malformed inputs") {
  Presentation p = klein();
  CHECK_THROWS_AS(parse_proof("step r1: a = a", p), parse_error);
  CHECK_THROWS_AS(parse_proof("step t: a = a via conj(1, r9)", p),
                  parse_error);
  CHECK_THROWS_AS(parse_proof("step t: a = a via conj(1, nope)", p),
                  parse_error);
  CHECK_THROWS_AS(parse_proof("step t: a = a via conj(1, r1)^-2", p),
                  parse_error);
  CHECK_THROWS_AS(parse_proof("t: a = a", p), parse_error);
  CHECK_THROWS_AS(
      parse_proof("step t: a = a\nstep t: b = b", p), error);
}

TEST_CASE("serialize round-trips") {
  Presentation p = klein();
  const char* text =
      "step inv: a = a^-1 via conj(a^-1, r1)\n"
      "step two: [a, b] = 1 via conj(1, r3)\n"
      "step free: a = a\n";
  ProofScript s = parse_proof(text, p);
  ProofScript again = parse_proof(serialize_proof(s), p);
  REQUIRE(again.steps().size() == s.steps().size());
  for (std::size_t i = 0; i < s.steps().size(); ++i) {
    CHECK(again.steps()[i].name == s.steps()[i].name);
    CHECK(again.steps()[i].lhs == s.steps()[i].lhs);
    CHECK(again.steps()[i].rhs == s.steps()[i].rhs);
    CHECK(again.steps()[i].factors.size() == s.steps()[i].factors.size());
  }
}

TEST_CASE("accepted identities hold in the abelianization") {
  // exponent-sum membership in the relation lattice: a cheap necessary
  // condition for soundness, checked via the Smith normal form
  Presentation p = klein();
  const char* text =
      "step inv: a = a^-1 via conj(a^-1, r1)\n"
      "step comm: a b = b a via conj(1, r3)\n";
  ProofScript s = parse_proof(text, p);
  ScriptReport r = check_script(s);
  REQUIRE(r.all_accepted);

  IntMatrix rel = relation_matrix(p);
  SmithResult snf = smith_normal_form(rel);
  for (const ProofStep& step : s.steps()) {
    // exponent vector of lhs rhs^-1
    const Word identity = step.identity_word();
    IntMatrix x(1, p.num_generators());
    for (const Letter& l : identity.letters()) x.at(0, l.gen) += l.sign;
    // x lies in the row lattice iff x*V is divisible by the diagonal
    IntMatrix xv = x * snf.v;
    const std::size_t nmin = std::min(snf.s.rows(), snf.s.cols());
    for (std::size_t j = 0; j < xv.cols(); ++j) {
      if (j < nmin && snf.s.at(j, j) != 0)
        CHECK(xv.at(0, j) % snf.s.at(j, j) == 0);
      else
        CHECK(xv.at(0, j) == 0);
    }
  }
}
