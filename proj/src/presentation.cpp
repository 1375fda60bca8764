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

#include "fpg/presentation.hpp"

#include <algorithm>
#include <map>

namespace fpg {

namespace {

// Letter-level lexicographic compare of equal-length letter vectors.
bool letters_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return letter_less(a[i], b[i]);
  return false;
}

std::vector<Letter> rotate(const std::vector<Letter>& ls, std::size_t k) {
  std::vector<Letter> out(ls.begin() + k, ls.end());
  out.insert(out.end(), ls.begin(), ls.begin() + k);
  return out;
}

// Remap a word onto another alphabet via a generator index map.
Word remap(const Word& w, const AlphabetPtr& target,
           const std::vector<std::uint32_t>& gen_map) {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (const Letter& l : w.letters())
    ls.push_back({gen_map[l.gen], l.sign});
  return Word(target, std::move(ls));
}

}  // namespace

Presentation::Presentation(AlphabetPtr alphabet)
    : Presentation(std::move(alphabet), {}) {}

Presentation::Presentation(AlphabetPtr alphabet, std::vector<Word> relators)
    : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw error("presentation without alphabet");
  relators_.reserve(relators.size());
  for (Word& r : relators) {
    if (!(*r.alphabet() == *alphabet_))
      throw alphabet_error("relator over a different alphabet");
    Word reduced = reduce(r);
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
}

Word relator_normal_form(const Word& w) {
  const Word core = cyclic_reduce(reduce(w)).core;
  if (core.empty()) return core;
  const Word inv_core = invert(core);
  const std::vector<Letter>* best = nullptr;
  std::vector<Letter> best_letters;
  for (const Word* cand : {&core, &inv_core}) {
    const auto& ls = cand->letters();
    for (std::size_t k = 0; k < ls.size(); ++k) {
      std::vector<Letter> r = rotate(ls, k);
      if (best == nullptr || letters_less(r, best_letters)) {
        best_letters = std::move(r);
        best = &best_letters;
      }
    }
  }
  return Word(w.alphabet(), best_letters);
}

std::optional<std::pair<std::size_t, Word>> find_definition(
    const Presentation& p, std::uint32_t gen) {
  std::optional<std::pair<std::size_t, Word>> best;
  std::size_t best_len = SIZE_MAX;
  Word best_relator(p.alphabet());
  for (std::size_t i = 0; i < p.num_relators(); ++i) {
    const Word& r = p.relator(i);
    const Word inv_r = invert(r);
    for (const Word* cand : {&r, &inv_r}) {
      const auto& ls = cand->letters();
      for (std::size_t k = 0; k < ls.size(); ++k) {
        if (!(ls[k].gen == gen && ls[k].sign == 1)) continue;
        std::vector<Letter> tail = rotate(ls, k);
        tail.erase(tail.begin());
        bool clean = std::none_of(tail.begin(), tail.end(),
                                  [&](const Letter& l) { return l.gen == gen; });
        if (!clean) continue;
        if (r.size() < best_len ||
            (r.size() == best_len && word_less(r, best_relator))) {
          best_len = r.size();
          best_relator = r;
          Word definition = invert(Word(p.alphabet(), std::move(tail)));
          best = {{i, std::move(definition)}};
        }
        break;  // one qualifying rotation per candidate word is enough
      }
      if (best && best->first == i) break;
    }
  }
  return best;
}

std::pair<Presentation, TietzeMove> eliminate_generator(
    const Presentation& p, std::uint32_t gen, std::size_t relator_index) {
  if (gen >= p.alphabet()->size()) throw error("generator index out of range");
  const Word& r = p.relator(relator_index);

  // Search rotations of r and r^-1 for the shape gen * tail, tail gen-free.
  std::optional<Word> definition;
  const Word inv_r = invert(r);
  for (const Word* cand : {&r, &inv_r}) {
    const auto& ls = cand->letters();
    for (std::size_t k = 0; k < ls.size() && !definition; ++k) {
      if (!(ls[k].gen == gen && ls[k].sign == 1)) continue;
      std::vector<Letter> tail = rotate(ls, k);
      tail.erase(tail.begin());
      if (std::none_of(tail.begin(), tail.end(),
                       [&](const Letter& l) { return l.gen == gen; }))
        definition = invert(Word(p.alphabet(), std::move(tail)));
    }
    if (definition) break;
  }
  if (!definition)
    throw tietze_error("relator '" + to_string(r) +
                       "' does not define generator '" +
                       p.alphabet()->name(gen) + "'");

  // New alphabet without the generator.
  std::vector<std::string> names;
  std::vector<std::uint32_t> gen_map(p.alphabet()->size(), 0);
  for (std::uint32_t i = 0; i < p.alphabet()->size(); ++i) {
    if (i == gen) continue;
    gen_map[i] = static_cast<std::uint32_t>(names.size());
    names.push_back(p.alphabet()->name(i));
  }
  AlphabetPtr target = make_alphabet(std::move(names));

  std::vector<Word> relators;
  relators.reserve(p.num_relators() - 1);
  for (std::size_t i = 0; i < p.num_relators(); ++i) {
    if (i == relator_index) continue;
    relators.push_back(remap(substitute(p.relator(i), gen, *definition),
                             target, gen_map));
  }
  TietzeMove move = TietzeEliminate{p.alphabet()->name(gen), relator_index,
                                    *definition};
  return {Presentation(std::move(target), std::move(relators)),
          std::move(move)};
}

Presentation apply_move(const Presentation& p, const TietzeMove& move) {
  if (const auto* m = std::get_if<TietzeEliminate>(&move)) {
    std::uint32_t gen = p.alphabet()->index_or_throw(m->generator);
    auto [next, replayed] = eliminate_generator(p, gen, m->relator_index);
    const auto& e = std::get<TietzeEliminate>(replayed);
    if (!(e.definition == m->definition))
      throw tietze_error("replayed definition for '" + m->generator +
                         "' differs from the logged one");
    return next;
  }
  if (const auto* m = std::get_if<TietzeRemoveDuplicate>(&move)) {
    const Word nf = relator_normal_form(p.relator(m->index));
    bool has_twin = false;
    for (std::size_t i = 0; i < p.num_relators() && !has_twin; ++i)
      has_twin = i != m->index && relator_normal_form(p.relator(i)) == nf;
    if (!has_twin)
      throw tietze_error("relator " + std::to_string(m->index) +
                         " has no duplicate; refusing to remove");
    std::vector<Word> relators = p.relators();
    relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(m->index));
    return Presentation(p.alphabet(), std::move(relators));
  }
  if (const auto* m = std::get_if<TietzeRemoveTrivial>(&move)) {
    if (!reduce(p.relator(m->index)).empty())
      throw tietze_error("relator " + std::to_string(m->index) +
                         " is not trivial");
    std::vector<Word> relators = p.relators();
    relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(m->index));
    return Presentation(p.alphabet(), std::move(relators));
  }
  if (const auto* m = std::get_if<TietzeAddRelator>(&move)) {
    Word product(p.alphabet());
    for (const CertFactor& f : m->certificate) {
      Word base = p.relator(f.relator_index);
      if (f.exponent < 0) base = invert(base);
      product = multiply(product, conjugate(f.conjugator, base));
    }
    if (!(product == reduce(m->relator)))
      throw tietze_error(
          "certificate product does not equal the relator to add");
    std::vector<Word> relators = p.relators();
    relators.push_back(m->relator);
    return Presentation(p.alphabet(), std::move(relators));
  }
  const auto& m = std::get<TietzeAddGenerator>(move);
  if (p.alphabet()->index(m.name))
    throw tietze_error("generator '" + m.name + "' already present");
  std::vector<std::string> names = p.alphabet()->names();
  names.push_back(m.name);
  AlphabetPtr target = make_alphabet(std::move(names));
  std::vector<std::uint32_t> gen_map(p.alphabet()->size());
  for (std::uint32_t i = 0; i < gen_map.size(); ++i) gen_map[i] = i;
  std::vector<Word> relators;
  relators.reserve(p.num_relators() + 1);
  for (const Word& r : p.relators()) relators.push_back(remap(r, target, gen_map));
  // new relator: g = definition
  std::vector<Letter> g{{static_cast<std::uint32_t>(target->size() - 1), 1}};
  relators.push_back(multiply(Word(target, std::move(g)),
                              invert(remap(m.definition, target, gen_map))));
  return Presentation(std::move(target), std::move(relators));
}

Presentation replay(const Presentation& source, const TietzeLog& log) {
  Presentation p = source;
  for (const TietzeMove& move : log) p = apply_move(p, move);
  return p;
}

std::pair<Presentation, TietzeLog> auto_simplify(const Presentation& p,
                                                 const SimplifyLimits& limits) {
  Presentation cur = p;
  TietzeLog log;
  std::size_t eliminations = 0;
  for (;;) {
    // Drop duplicates under relator normal form (keep the first of each).
    bool removed = true;
    while (removed) {
      removed = false;
      std::vector<Word> nfs;
      nfs.reserve(cur.num_relators());
      for (const Word& r : cur.relators())
        nfs.push_back(relator_normal_form(r));
      for (std::size_t i = 0; i < nfs.size() && !removed; ++i)
        for (std::size_t j = i + 1; j < nfs.size() && !removed; ++j)
          if (nfs[i] == nfs[j]) {
            TietzeMove move = TietzeRemoveDuplicate{j};
            cur = apply_move(cur, move);
            log.push_back(std::move(move));
            removed = true;
          }
    }

    if (eliminations >= limits.max_eliminations) break;

    // Shortest eliminable defining relator wins; ties by generator order.
    std::optional<std::uint32_t> best_gen;
    std::size_t best_len = SIZE_MAX;
    std::size_t best_idx = 0;
    for (std::uint32_t g = 0; g < cur.alphabet()->size(); ++g) {
      auto def = find_definition(cur, g);
      if (!def) continue;
      std::size_t len = cur.relator(def->first).size();
      if (len < best_len) {
        best_len = len;
        best_gen = g;
        best_idx = def->first;
      }
    }
    if (!best_gen || best_len > limits.max_defining_length) break;

    auto [next, move] = eliminate_generator(cur, *best_gen, best_idx);
    cur = std::move(next);
    log.push_back(std::move(move));
    ++eliminations;
  }
  return {std::move(cur), std::move(log)};
}

PresentationDiff diff_presentations(
    const Presentation& p1, const Presentation& p2,
    const std::map<std::string, std::string>& rename) {
  if (p1.alphabet()->size() != p2.alphabet()->size())
    throw alphabet_error("presentations have different generator counts");

  std::vector<std::uint32_t> gen_map(p1.alphabet()->size());
  for (std::uint32_t i = 0; i < p1.alphabet()->size(); ++i) {
    const std::string& name = p1.alphabet()->name(i);
    auto it = rename.find(name);
    const std::string& target = it == rename.end() ? name : it->second;
    gen_map[i] = p2.alphabet()->index_or_throw(target);
  }

  auto nf_multiset = [](const std::vector<Word>& ws) {
    std::vector<Word> nfs;
    nfs.reserve(ws.size());
    for (const Word& w : ws) nfs.push_back(relator_normal_form(w));
    std::sort(nfs.begin(), nfs.end(), word_less);
    return nfs;
  };

  std::vector<Word> first;
  first.reserve(p1.num_relators());
  for (const Word& r : p1.relators())
    first.push_back(remap(r, p2.alphabet(), gen_map));

  std::vector<Word> nf1 = nf_multiset(first);
  std::vector<Word> nf2 = nf_multiset(p2.relators());

  PresentationDiff diff;
  std::size_t i = 0, j = 0;
  while (i < nf1.size() && j < nf2.size()) {
    if (nf1[i] == nf2[j]) {
      ++diff.matched;
      ++i;
      ++j;
    } else if (word_less(nf1[i], nf2[j])) {
      diff.only_first.push_back(nf1[i++]);
    } else {
      diff.only_second.push_back(nf2[j++]);
    }
  }
  for (; i < nf1.size(); ++i) diff.only_first.push_back(nf1[i]);
  for (; j < nf2.size(); ++j) diff.only_second.push_back(nf2[j]);
  return diff;
}

bool presentations_match(const Presentation& p1, const Presentation& p2,
                         const std::map<std::string, std::string>& rename) {
  return diff_presentations(p1, p2, rename).empty();
}

}  // namespace fpg
