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

#include "fpg/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "fpg/abelian.hpp"
#include "fpg/enumerator.hpp"
#include "fpg/oracle.hpp"
#include "fpg/parser.hpp"
#include "fpg/surgery.hpp"

namespace fpg {

namespace {

// ---- small helpers ------------------------------------------------------

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      detail = msg;
    }
  }
  void note(const std::string& msg) {
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
};

Presentation eliminate_chain(
    const Presentation& start,
    const std::vector<std::pair<std::string, std::string>>& defs, Check& c) {
  Presentation p = start;
  for (const auto& [gen_name, def_text] : defs) {
    auto gen = p.alphabet()->index(gen_name);
    if (!gen) {
      c.require(false, "generator '" + gen_name + "' missing");
      return p;
    }
    auto def = find_definition(p, *gen);
    if (!def) {
      c.require(false, "no defining relator for '" + gen_name + "'");
      return p;
    }
    const Word expected = parse_word(def_text, p.alphabet());
    c.require(def->second == expected,
              "definition of '" + gen_name + "' is " + to_string(def->second) +
                  ", expected " + to_string(expected));
    p = eliminate_generator(p, *gen, def->first).first;
  }
  return p;
}

// The convention-variant relator pair: the mechanical elimination of e0_raw
// and the displayed presentation disagree in exactly one relator, and each
// version is a consequence of the other presentation. The certificates
// below witness both directions; the checker is plain free reduction.
struct VariantFactor {
  const char* conjugator;
  std::size_t relator_index;
  int exponent;
};

constexpr VariantFactor kMech9FromDisplayed[] = {
    {"c c q c^-1 g^-1 e g e^-1", 0, -1},
    {"c q", 8, +1},
};
constexpr VariantFactor kDisp9FromMech[] = {
    {"q^-1 c q c^-1 g^-1 e g e^-1", 0, +1},
    {"q^-1 c^-1", 8, +1},
};

template <std::size_t N>
bool certificate_yields(const Presentation& source,
                        const VariantFactor (&factors)[N],
                        const Word& target) {
  Word product(source.alphabet());
  for (const VariantFactor& f : factors) {
    Word base = source.relator(f.relator_index);
    if (f.exponent < 0) base = invert(base);
    product = multiply(product, conjugate(parse_word(f.conjugator,
                                                     source.alphabet()),
                                          base));
  }
  return product == target;
}

// Evaluates one certificate factor to its word value (free reduction).
Word check_factor_word(const Presentation& p,
                       const std::vector<ProofStep>& steps,
                       const ProofFactor& f) {
  Word base = f.source.kind == ProofSource::Kind::relator
                  ? p.relator(f.source.index)
                  : steps.at(f.source.index).identity_word();
  if (f.exponent < 0) base = invert(base);
  return conjugate(f.conjugator, base);
}

Word random_reduced_word(const AlphabetPtr& alphabet, std::mt19937_64& rng,
                         std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::uint32_t> gen_dist(
      0, static_cast<std::uint32_t>(alphabet->size() - 1));
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::vector<Letter> ls;
  const std::size_t len = len_dist(rng);
  for (std::size_t i = 0; i < len; ++i)
    ls.push_back({gen_dist(rng),
                  static_cast<std::int8_t>(sign_dist(rng) ? 1 : -1)});
  return Word(alphabet, std::move(ls));
}

// ---- criteria -----------------------------------------------------------

CriterionResult criterion_triviality(const Corpus& corpus) {
  Check c;
  for (const char* name : {"m_displayed.grp", "m_raw.grp"}) {
    const Presentation& p = corpus.presentation(name);
    const auto t0 = std::chrono::steady_clock::now();
    EnumerationResult r = enumerate(p);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    c.require(r.completed, std::string(name) + ": enumeration exhausted");
    if (r.completed) {
      c.require(r.index == 1, std::string(name) + ": order " +
                                  std::to_string(r.index) + ", expected 1");
      c.require(r.defined_cosets <= 1'000'000,
                std::string(name) + ": coset budget exceeded");
      c.require(secs < 10.0, std::string(name) + ": took too long");
      TableVerification v = verify_table(r.table, p);
      c.require(v.ok, std::string(name) + ": table check: " + v.diagnostic);
      std::ostringstream line;
      line << name << " order 1, " << r.defined_cosets << " cosets, "
           << r.stats.coincidences << " coincidences";
      c.note(line.str());
    }
  }
  return {1, "pi1(M) trivial by coset enumeration", c.ok, c.detail};
}

CriterionResult criterion_e0_elimination(const Corpus& corpus) {
  Check c;
  const Presentation mech = mechanical_e0(corpus);
  const Presentation& raw = corpus.presentation("e0_raw.grp");
  const Presentation& displayed = corpus.presentation("e0_displayed.grp");

  c.require(mech.num_relators() == 9,
            "expected 9 relators, got " + std::to_string(mech.num_relators()));
  c.require(mech.alphabet()->names() ==
                std::vector<std::string>({"a", "c", "e", "g", "h", "q"}),
            "unexpected generators after elimination");

  PresentationDiff diff = diff_presentations(mech, displayed);
  c.note(std::to_string(diff.matched) + "/9 relators match by normal form");
  c.require(diff.only_first.size() == diff.only_second.size(),
            "unpaired relator mismatch");
  if (diff.empty()) {
    c.note("diff empty");
  } else {
    // Any mismatch must be the certified convention-variant pair.
    c.require(diff.only_first.size() == 1 &&
                  diff.only_first[0] ==
                      relator_normal_form(mech.relator(8)) &&
                  diff.only_second[0] ==
                      relator_normal_form(displayed.relator(8)),
              "unexpected relator diff");
    c.require(certificate_yields(displayed, kMech9FromDisplayed,
                                 mech.relator(8)),
              "variant certificate (mechanical from displayed) failed");
    c.require(certificate_yields(mech, kDisp9FromMech, displayed.relator(8)),
              "variant certificate (displayed from mechanical) failed");
    c.note("1 convention-variant pair certified in both directions");
  }

  c.require(abelianize(mech) == abelianize(displayed),
            "abelianizations differ");

  for (const QuotientMap& map : corpus.quotient_maps) {
    for (const Presentation* p : {&raw, &mech, &displayed})
      c.require(map.kills_all_relators(*p),
                "quotient map '" + map.name + "' does not factor through");
    c.require(map.image_order(mech) == map.expected_image_order &&
                  map.image_order(displayed) == map.expected_image_order,
              "quotient map '" + map.name + "' image order mismatch");
  }
  c.note(std::to_string(corpus.quotient_maps.size()) +
         " finite quotient maps agree");
  return {2, "elimination reproduces the displayed pi1(E0~)", c.ok, c.detail};
}

CriterionResult criterion_m_elimination(const Corpus& corpus) {
  Check c;
  Presentation mech = mechanical_m(corpus);
  c.require(mech.num_generators() == 6,
            "expected 6 generators, got " +
                std::to_string(mech.num_generators()));
  c.require(mech.num_relators() == 14,
            "expected 14 relators, got " +
                std::to_string(mech.num_relators()));

  EnumerationResult rm = enumerate(mech);
  c.require(rm.completed && rm.index == 1,
            "mechanically derived presentation is not of order 1");
  EnumerationResult rd = enumerate(corpus.presentation("m_displayed.grp"));
  c.require(rd.completed && rd.index == 1, "m_displayed is not of order 1");
  if (c.ok) {
    PresentationDiff diff =
        diff_presentations(mech, corpus.presentation("m_displayed.grp"));
    c.note("both enumerate to order 1; " + std::to_string(diff.matched) +
           "/14 relators match by normal form");
  }
  return {3, "elimination reproduces pi1(M), robust to the convention",
          c.ok, c.detail};
}

CriterionResult criterion_abelianization(const Corpus& corpus) {
  Check c;
  const AbelianInvariants trivial{};
  c.require(abelianize(corpus.presentation("m_displayed.grp")) == trivial,
            "m_displayed abelianization not trivial");
  c.require(abelianize(mechanical_m(corpus)) == trivial,
            "mechanical M abelianization not trivial");
  AbelianInvariants rank2{{}, 2};
  c.require(abelianize(corpus.presentation("e0_raw.grp")) == rank2,
            "e0_raw abelianization is not free of rank 2");
  c.require(abelianize(corpus.presentation("e0_displayed.grp")) == rank2,
            "e0_displayed abelianization is not free of rank 2");
  c.note("M trivial; E0~ free of rank 2");
  return {4, "abelianizations", c.ok, c.detail};
}

CriterionResult criterion_proof_replay(const Corpus& corpus) {
  Check c;
  const ProofScript& script = corpus.proof;
  const Presentation& p = script.presentation();

  ScriptReport base = check_script(script);
  c.require(base.all_accepted, "shipped script not fully accepted");
  c.require(base.proves_trivial, "shipped script does not prove triviality");
  c.note(base.summary);

  // Single-fault injection: altering any one conjugator or source must
  // reject exactly the altered step.
  std::size_t corruptions = 0;
  for (std::size_t si = 0; si < script.steps().size() && c.ok; ++si) {
    for (std::size_t fi = 0; fi < script.steps()[si].factors.size() && c.ok;
         ++fi) {
      for (int mode = 0; mode < 2 && c.ok; ++mode) {
        std::vector<ProofStep> steps = script.steps();
        ProofFactor& f = steps[si].factors[fi];
        const Word original = check_factor_word(p, script.steps(), f);
        bool changed = false;
        if (mode == 0) {
          // append letters until the factor value changes
          for (std::uint32_t g = 0; g < p.num_generators() && !changed; ++g) {
            for (int s : {1, -1}) {
              ProofFactor candidate = f;
              candidate.conjugator = multiply(
                  f.conjugator,
                  Word(p.alphabet(), {{g, static_cast<std::int8_t>(s)}}));
              if (!(check_factor_word(p, script.steps(), candidate) ==
                    original)) {
                f = candidate;
                changed = true;
                break;
              }
            }
          }
        } else {
          // rewire the source to a different relator
          for (std::size_t ri = 0; ri < p.num_relators() && !changed; ++ri) {
            ProofFactor candidate = f;
            candidate.source = {ProofSource::Kind::relator, ri};
            if (!(check_factor_word(p, script.steps(), candidate) ==
                  original)) {
              f = candidate;
              changed = true;
            }
          }
        }
        if (!changed) continue;
        ++corruptions;
        ScriptReport r = check_script(ProofScript(p, std::move(steps)));
        c.require(!r.verdicts[si].accepted,
                  "corrupted step '" + script.steps()[si].name +
                      "' still accepted");
        for (std::size_t k = 0; k < r.verdicts.size(); ++k)
          if (k != si)
            c.require(r.verdicts[k].accepted,
                      "corruption leaked into step " + std::to_string(k));
      }
    }
  }
  c.note(std::to_string(corruptions) + " single-fault corruptions rejected");
  return {5, "proof script replay", c.ok, c.detail};
}

struct SuiteEntry {
  const char* text;
  std::size_t order;
};

constexpr SuiteEntry kSmallGroupSuite[] = {
    {"< a | a >", 1},
    {"< a | a^2 >", 2},
    {"< a | a^3 >", 3},
    {"< a | a^4 >", 4},
    {"< a | a^5 >", 5},
    {"< a | a^6 >", 6},
    {"< a, b | a^2, b^2, (a b)^3 >", 6},
    {"< a, b | a^4, a^2 b^-2, b^-1 a b a >", 8},
};

CriterionResult criterion_oracle_equivalence() {
  Check c;
  for (const SuiteEntry& entry : kSmallGroupSuite) {
    Presentation p = parse_presentation(entry.text);
    EnumerationResult r = enumerate(p);
    c.require(r.completed, std::string(entry.text) + ": exhausted");
    if (!r.completed) continue;
    const std::size_t model_order = oracle::max_quotient_order(p);
    c.require(r.index == model_order,
              std::string(entry.text) + ": enumerated " +
                  std::to_string(r.index) + " but oracle says " +
                  std::to_string(model_order));
    c.require(r.index == entry.order,
              std::string(entry.text) + ": expected order " +
                  std::to_string(entry.order));
    if (auto arith = oracle::cyclic_order(p))
      c.require(*arith == r.index,
                std::string(entry.text) + ": arithmetic oracle disagrees");
  }
  c.note("8 presentations, enumerator == brute-force oracle");
  return {6, "enumerator matches the brute-force oracle", c.ok, c.detail};
}

CriterionResult criterion_tietze_invariance() {
  Check c;
  std::mt19937_64 rng(0x5eed7001u);
  std::size_t sequences = 0;
  for (const SuiteEntry& entry : kSmallGroupSuite) {
    const Presentation base = parse_presentation(entry.text);
    const AbelianInvariants base_inv = abelianize(base);
    for (int trial = 0; trial < 25 && c.ok; ++trial) {
      Presentation p = base;
      TietzeLog log;
      int fresh = 0;
      std::uniform_int_distribution<int> move_dist(0, 3);
      for (int m = 0; m < 6; ++m) {
        switch (move_dist(rng)) {
          case 0: {  // add a generator with a defining word
            TietzeMove move = TietzeAddGenerator{
                "t" + std::to_string(fresh++),
                random_reduced_word(p.alphabet(), rng, 3)};
            p = apply_move(p, move);
            log.push_back(move);
            break;
          }
          case 1: {  // eliminate, if something is eliminable
            std::vector<std::uint32_t> candidates;
            for (std::uint32_t g = 0; g < p.num_generators(); ++g)
              if (find_definition(p, g)) candidates.push_back(g);
            if (candidates.empty() || p.num_generators() <= 1) break;
            std::uniform_int_distribution<std::size_t> pick(
                0, candidates.size() - 1);
            std::uint32_t g = candidates[pick(rng)];
            auto def = find_definition(p, g);
            auto [next, move] = eliminate_generator(p, g, def->first);
            p = std::move(next);
            log.push_back(move);
            break;
          }
          case 2: {  // add a certified consequence relator
            if (p.num_relators() == 0) break;
            std::uniform_int_distribution<std::size_t> pick(
                0, p.num_relators() - 1);
            std::vector<CertFactor> cert;
            cert.push_back({random_reduced_word(p.alphabet(), rng, 2),
                            pick(rng), rng() % 2 ? 1 : -1});
            if (rng() % 2)
              cert.push_back({random_reduced_word(p.alphabet(), rng, 2),
                              pick(rng), rng() % 2 ? 1 : -1});
            Word product(p.alphabet());
            for (const CertFactor& f : cert) {
              Word base_word = p.relator(f.relator_index);
              if (f.exponent < 0) base_word = invert(base_word);
              product = multiply(product, conjugate(f.conjugator, base_word));
            }
            TietzeMove move = TietzeAddRelator{product, std::move(cert)};
            p = apply_move(p, move);
            log.push_back(move);
            break;
          }
          default: {  // remove a duplicate if present
            bool done = false;
            for (std::size_t i = 0; i < p.num_relators() && !done; ++i)
              for (std::size_t j = i + 1; j < p.num_relators() && !done; ++j)
                if (relator_normal_form(p.relator(i)) ==
                    relator_normal_form(p.relator(j))) {
                  TietzeMove move = TietzeRemoveDuplicate{j};
                  p = apply_move(p, move);
                  log.push_back(move);
                  done = true;
                }
            break;
          }
        }
      }
      ++sequences;
      Presentation replayed = replay(base, log);
      c.require(replayed == p, "replay mismatch");
      EnumerationResult r = enumerate(p, {}, {200'000, 200'000});
      c.require(r.completed && r.index == entry.order,
                std::string(entry.text) + ": order changed by Tietze moves");
      c.require(abelianize(p) == base_inv,
                std::string(entry.text) + ": abelian invariants changed");
    }
  }
  c.note(std::to_string(sequences) + " randomized move sequences");
  return {7, "Tietze moves preserve order and homology", c.ok, c.detail};
}

CriterionResult criterion_word_properties() {
  Check c;
  std::mt19937_64 rng(0x5eed8002u);
  AlphabetPtr alphabet = make_alphabet({"a", "b", "c"});
  std::uniform_int_distribution<std::uint32_t> gen_dist(0, 2);
  std::uniform_int_distribution<int> sign_dist(0, 1);

  std::size_t failures = 0;
  for (int i = 0; i < 10'000; ++i) {
    // idempotence on arbitrary (unreduced) input
    std::vector<Letter> raw;
    std::uniform_int_distribution<std::size_t> len_dist(0, 12);
    const std::size_t len = len_dist(rng);
    for (std::size_t k = 0; k < len; ++k)
      raw.push_back({gen_dist(rng),
                     static_cast<std::int8_t>(sign_dist(rng) ? 1 : -1)});
    Word w = reduce(Word::raw(alphabet, raw));
    if (!(reduce(w) == w)) ++failures;

    // confluence: insert a cancelling pair anywhere, reduction undoes it
    std::uniform_int_distribution<std::size_t> pos_dist(0, w.size());
    const std::size_t pos = pos_dist(rng);
    Letter l{gen_dist(rng), static_cast<std::int8_t>(sign_dist(rng) ? 1 : -1)};
    std::vector<Letter> spliced(w.letters().begin(),
                                w.letters().begin() + pos);
    spliced.push_back(l);
    spliced.push_back(l.inverse());
    spliced.insert(spliced.end(), w.letters().begin() + pos,
                   w.letters().end());
    if (!(reduce(Word::raw(alphabet, spliced)) == w)) ++failures;

    // inverse anti-homomorphism
    Word u = random_reduced_word(alphabet, rng, 8);
    Word v = random_reduced_word(alphabet, rng, 8);
    if (!(invert(multiply(u, v)) == multiply(invert(v), invert(u))))
      ++failures;
  }
  c.require(failures == 0, std::to_string(failures) + " property failures");
  c.note("3 properties x 10000 cases");
  return {8, "word engine properties", c.ok, c.detail};
}

CriterionResult criterion_surgery() {
  Check c;
  for (std::int64_t p = -5; p <= 5; ++p) {
    GluingMatrix m = log_transform_matrix(p);
    c.require(determinant(m) == 1,
              "determinant at p=" + std::to_string(p) + " is not 1");
    c.require(compose(m, invert(m)) == GluingMatrix::identity(),
              "inverse fails at p=" + std::to_string(p));
    c.require(is_luttinger(p) == (p == 1 || p == -1),
              "Luttinger flag wrong at p=" + std::to_string(p));
  }
  c.note("p in -5..5 unimodular; Luttinger exactly at p=+/-1");
  return {9, "log-transform gluing matrix", c.ok, c.detail};
}

CriterionResult criterion_parser(const Corpus& corpus,
                                 const std::filesystem::path& corpus_dir) {
  Check c;
  for (const CorpusEntry& e : corpus.manifest) {
    if (e.kind != "presentation") continue;
    const Presentation& p = corpus.presentation(e.path);
    Presentation reparsed = parse_presentation(serialize_presentation(p));
    c.require(reparsed == p, e.path + ": round-trip mismatch");
  }

  std::mt19937_64 rng(0x5eedaaaau);
  const std::string seedtext = read_file(corpus_dir / "m_displayed.grp");
  const std::string charset = "<>|,=^-[]()abqxyz019 \t\n#_";
  std::size_t parsed_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    std::string input;
    if (i % 3 == 0) {
      // mutate a valid file
      input = seedtext;
      std::uniform_int_distribution<std::size_t> pos(0, input.size() - 1);
      for (int k = 0; k < 8; ++k)
        input[pos(rng)] = static_cast<char>(rng() % 256);
    } else if (i % 3 == 1) {
      std::uniform_int_distribution<std::size_t> len(0, 80);
      std::uniform_int_distribution<std::size_t> pick(0, charset.size() - 1);
      for (std::size_t k = len(rng); k > 0; --k) input += charset[pick(rng)];
    } else {
      std::uniform_int_distribution<std::size_t> len(0, 40);
      for (std::size_t k = len(rng); k > 0; --k)
        input += static_cast<char>(rng() % 256);
    }
    try {
      (void)parse_presentation(input);
      ++parsed_ok;
    } catch (const parse_error&) {
      // spanned error: fine
    } catch (const std::exception& ex) {
      c.require(false, std::string("non-parse exception: ") + ex.what());
    }
  }
  c.note("corpus round-trips; 1000 fuzz inputs, " +
         std::to_string(parsed_ok) + " parsed cleanly, rest spanned errors");
  return {10, "parser round-trip and fuzzing", c.ok, c.detail};
}

}  // namespace

Presentation mechanical_e0(const Corpus& corpus) {
  Check c;
  Presentation p = eliminate_chain(corpus.presentation("e0_raw.grp"),
                                   {{"f", "a^-1"},
                                    {"b", "a"},
                                    {"p", "d^-1"},
                                    {"d", "c q"},
                                    {"k", "h"}},
                                   c);
  if (!c.ok) throw error("e0 elimination failed: " + c.detail);
  return p;
}

Presentation mechanical_m(const Corpus& corpus) {
  Check c;
  Presentation p = eliminate_chain(corpus.presentation("m_raw.grp"),
                                   {{"y", "q"},
                                    {"x", "e^-1 q"},
                                    {"f", "a^-1"},
                                    {"b", "a"},
                                    {"p", "d^-1"},
                                    {"d", "c q"},
                                    {"k", "h"}},
                                   c);
  if (!c.ok) throw error("m elimination failed: " + c.detail);
  return p;
}

std::vector<CriterionResult> run_paper_verification(
    const std::filesystem::path& corpus_dir) {
  Corpus corpus = load_corpus(corpus_dir);
  std::vector<CriterionResult> results;
  results.push_back(criterion_triviality(corpus));
  results.push_back(criterion_e0_elimination(corpus));
  results.push_back(criterion_m_elimination(corpus));
  results.push_back(criterion_abelianization(corpus));
  results.push_back(criterion_proof_replay(corpus));
  results.push_back(criterion_oracle_equivalence());
  results.push_back(criterion_tietze_invariance());
  results.push_back(criterion_word_properties());
  results.push_back(criterion_surgery());
  results.push_back(criterion_parser(corpus, corpus_dir));
  return results;
}

}  // namespace fpg
