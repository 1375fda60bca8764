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

#include "fpg/corpus.hpp"

#include <doctest.h>

#include <random>

#include "fpg/abelian.hpp"
#include "fpg/enumerator.hpp"
#include "fpg/oracle.hpp"
#include "fpg/parser.hpp"
#include "fpg/verify.hpp"

using namespace fpg;

namespace {

const Corpus& corpus() {
  static const Corpus c = load_corpus(FPG_CORPUS_DIR);
  return c;
}

}  // namespace

TEST_CASE("corpus shape") {
  const Corpus& c = corpus();
  CHECK(c.manifest.size() == 5);
  CHECK(c.presentation("e0_raw.grp").num_generators() == 11);
  CHECK(c.presentation("e0_raw.grp").num_relators() == 14);
  CHECK(c.presentation("e0_displayed.grp").num_generators() == 6);
  CHECK(c.presentation("e0_displayed.grp").num_relators() == 9);
  CHECK(c.presentation("m_raw.grp").num_generators() == 13);
  CHECK(c.presentation("m_raw.grp").num_relators() == 21);
  CHECK(c.presentation("m_displayed.grp").num_generators() == 6);
  CHECK(c.presentation("m_displayed.grp").num_relators() == 14);
  CHECK(c.proof.steps().size() == 11);
  CHECK(c.quotient_maps.size() == 2);
  for (const CorpusEntry& e : c.manifest) CHECK_FALSE(e.description.empty());
}

TEST_CASE("corpus files round-trip through the parser") {
  for (const auto& [name, p] : corpus().presentations) {
    CAPTURE(name);
    CHECK(parse_presentation(serialize_presentation(p)) == p);
  }
}

TEST_CASE("m_raw extends e0_raw") {
  const Presentation& e0 = corpus().presentation("e0_raw.grp");
  const Presentation& m = corpus().presentation("m_raw.grp");
  for (std::size_t i = 0; i < e0.num_relators(); ++i)
    CHECK(to_string(e0.relator(i)) == to_string(m.relator(i)));
  // 7 new relator words
  CHECK(m.num_relators() - e0.num_relators() == 7);
}

TEST_CASE("quotient maps have the advertised image orders") {
  for (const QuotientMap& map : corpus().quotient_maps) {
    CAPTURE(map.name);
    CHECK(map.image_order(corpus().presentation("e0_displayed.grp")) ==
          map.expected_image_order);
  }
}

TEST_CASE("quotient map parser rejects garbage") {
  CHECK_THROWS_AS(parse_quotient_maps("map x degree 3\n"), error);
  CHECK_THROWS_AS(parse_quotient_maps("a (1 2)\n"), error);
  CHECK_THROWS_AS(
      parse_quotient_maps("map x degree 2\n a (1 5)\nend\n"), error);
}

TEST_CASE("e0 mechanical elimination matches the displayed presentation") {
  Presentation mech = mechanical_e0(corpus());
  CHECK(mech.num_relators() == 9);
  PresentationDiff diff =
      diff_presentations(mech, corpus().presentation("e0_displayed.grp"));
  CHECK(diff.matched == 8);
  CHECK(diff.only_first.size() == 1);
  CHECK(diff.only_second.size() == 1);
  // the two versions of the ninth relator agree in the abelianization
  CHECK(abelianize(mech) ==
        abelianize(corpus().presentation("e0_displayed.grp")));
}

TEST_CASE("m mechanical elimination and the displayed presentation") {
  Presentation mech = mechanical_m(corpus());
  CHECK(mech.num_generators() == 6);
  CHECK(mech.num_relators() == 14);
  PresentationDiff diff =
      diff_presentations(mech, corpus().presentation("m_displayed.grp"));
  CHECK(diff.matched == 12);
  CHECK(diff.only_first.size() == 2);
  CHECK(diff.only_second.size() == 2);
}

TEST_CASE("raw and displayed abelianizations agree") {
  const Corpus& c = corpus();
  CHECK(abelianize(c.presentation("e0_raw.grp")) ==
        abelianize(c.presentation("e0_displayed.grp")));
  CHECK(abelianize(c.presentation("m_raw.grp")).trivial());
  CHECK(abelianize(c.presentation("m_displayed.grp")).trivial());

  // the displayed relation matrix reduces to four unit factors and two
  // zero columns
  SmithResult snf =
      smith_normal_form(relation_matrix(c.presentation("e0_displayed.grp")));
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(snf.s.at(i, i) == (i < 4 ? 1 : 0));
}

TEST_CASE("the shipped proof script is accepted and proves triviality") {
  ScriptReport r = check_script(corpus().proof);
  CHECK(r.all_accepted);
  CHECK(r.proves_trivial);
  // cross-validation: the certificate claim matches the enumerator
  EnumerationResult e = enumerate(corpus().presentation("m_displayed.grp"));
  REQUIRE(e.completed);
  CHECK(e.index == 1);
}

TEST_CASE("reordering independent proof steps does not change verdicts") {
  const ProofScript& s = corpus().proof;
  // q_comm_ah (index 4) depends only on relators; e_triv (2) and g_eq_qq (3)
  // do not cite it. Move it two places earlier and remap indices.
  std::vector<ProofStep> steps = s.steps();
  ProofStep moved = steps[4];
  steps.erase(steps.begin() + 4);
  steps.insert(steps.begin() + 2, moved);
  auto remap = [](std::size_t old_index) {
    if (old_index == 4) return std::size_t{2};
    if (old_index == 2 || old_index == 3) return old_index + 1;
    return old_index;
  };
  for (ProofStep& st : steps)
    for (ProofFactor& f : st.factors)
      if (f.source.kind == ProofSource::Kind::step)
        f.source.index = remap(f.source.index);
  ScriptReport r = check_script(ProofScript(s.presentation(), steps));
  CHECK(r.all_accepted);
  CHECK(r.proves_trivial);
}

TEST_CASE("Tietze moves preserve the corpus abelianization") {
  // order cannot be checked here (the group is infinite), but the abelian
  // invariants must survive any move sequence
  const Presentation& base = corpus().presentation("e0_displayed.grp");
  const AbelianInvariants inv = abelianize(base);
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::size_t> rel(0, base.num_relators() - 1);
  Presentation p = base;
  for (int i = 0; i < 12; ++i) {
    switch (i % 3) {
      case 0: {
        p = apply_move(p, TietzeAddGenerator{
                              "t" + std::to_string(i),
                              p.relators().empty()
                                  ? Word(p.alphabet())
                                  : p.relator(rel(rng) % p.num_relators())});
        break;
      }
      case 1: {
        std::size_t idx = rel(rng) % p.num_relators();
        Word conj_by = Word(p.alphabet(), {{0, 1}});
        p = apply_move(p, TietzeAddRelator{conjugate(conj_by, p.relator(idx)),
                                           {{conj_by, idx, 1}}});
        break;
      }
      default: {
        std::vector<std::uint32_t> cands;
        for (std::uint32_t g = 0; g < p.num_generators(); ++g)
          if (find_definition(p, g)) cands.push_back(g);
        if (cands.empty()) break;
        auto def = find_definition(p, cands[0]);
        p = eliminate_generator(p, cands[0], def->first).first;
        break;
      }
    }
    CHECK(abelianize(p) == inv);
  }
}

TEST_CASE("auto_simplify contracts the raw presentations") {
  const Presentation& raw = corpus().presentation("e0_raw.grp");
  auto [simplified, log] = auto_simplify(raw);
  CHECK(simplified.num_generators() <= 6);
  CHECK(abelianize(simplified) == abelianize(raw));
  CHECK(replay(raw, log) == simplified);

  // generator count never increases along the log
  Presentation cur = raw;
  std::size_t gens = cur.num_generators();
  for (const TietzeMove& move : log) {
    cur = apply_move(cur, move);
    CHECK(cur.num_generators() <= gens);
    gens = cur.num_generators();
  }
}

TEST_CASE("the models oracle is self-consistent") {
  const auto& models = oracle::small_group_models();
  CHECK(models.size() == 24);
  std::map<std::size_t, int> per_order;
  for (const auto& g : models) {
    CHECK(g.check_axioms());
    ++per_order[g.order()];
  }
  // classification counts for orders 1..12
  const std::map<std::size_t, int> expected{{1, 1}, {2, 1}, {3, 1}, {4, 2},
                                            {5, 1}, {6, 2}, {7, 1}, {8, 5},
                                            {9, 2}, {10, 2}, {11, 1}, {12, 5}};
  CHECK(per_order == expected);
}
