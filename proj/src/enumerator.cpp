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

#include <deque>
#include <sstream>

namespace fpg {

namespace {

struct limit_reached {};  // internal control flow for the coset cap

}  // namespace

CosetTable::CosetTable(std::size_t num_generators) : ngens_(num_generators) {
  rows_.emplace_back(2 * ngens_, -1);
  parent_.push_back(0);
  live_ = 1;
}

std::size_t CosetTable::find(std::size_t c) {
  std::size_t root = c;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[c] != root) {
    std::size_t next = parent_[c];
    parent_[c] = root;
    c = next;
  }
  return root;
}

std::size_t CosetTable::representative(std::size_t c) const {
  while (parent_[c] != c) c = parent_[c];
  return c;
}

std::size_t CosetTable::define(std::size_t coset, std::size_t dir) {
  std::size_t fresh = rows_.size();
  rows_.emplace_back(2 * ngens_, -1);
  parent_.push_back(fresh);
  ++live_;
  ++stats.cosets_defined;
  rows_[coset][dir] = static_cast<std::int64_t>(fresh);
  rows_[fresh][dir ^ 1] = static_cast<std::int64_t>(coset);
  return fresh;
}

void CosetTable::merge(std::size_t a, std::size_t b,
                       std::vector<std::size_t>& queue) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a > b) std::swap(a, b);  // smaller id becomes the representative
  parent_[b] = a;
  --live_;
  queue.push_back(b);
}

void CosetTable::coincide(std::size_t a, std::size_t b) {
  ++stats.coincidences;
  std::vector<std::size_t> queue;
  merge(a, b, queue);
  // Transfer each dead coset's edges onto representatives; conflicting
  // edges become further coincidences.
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::size_t dead = queue[qi];
    for (std::size_t d = 0; d < 2 * ngens_; ++d) {
      const std::int64_t target = rows_[dead][d];
      if (target < 0) continue;
      rows_[static_cast<std::size_t>(target)][d ^ 1] = -1;
      const std::size_t mu = find(dead);
      const std::size_t nu = find(static_cast<std::size_t>(target));
      if (rows_[mu][d] >= 0) {
        merge(nu, static_cast<std::size_t>(rows_[mu][d]), queue);
      } else if (rows_[nu][d ^ 1] >= 0) {
        merge(mu, static_cast<std::size_t>(rows_[nu][d ^ 1]), queue);
      } else {
        rows_[mu][d] = static_cast<std::int64_t>(nu);
        rows_[nu][d ^ 1] = static_cast<std::int64_t>(mu);
      }
    }
  }
}

void CosetTable::scan_and_fill(std::size_t coset,
                               const std::vector<std::size_t>& word) {
  ++stats.relator_scans;
  if (word.empty()) return;
  std::ptrdiff_t i = 0;
  std::ptrdiff_t j = static_cast<std::ptrdiff_t>(word.size()) - 1;
  std::size_t f = coset;
  std::size_t b = coset;
  for (;;) {
    while (i <= j && rows_[f][word[static_cast<std::size_t>(i)]] >= 0)
      f = static_cast<std::size_t>(
          rows_[f][word[static_cast<std::size_t>(i++)]]);
    if (i > j) {
      if (f != b) coincide(f, b);
      return;
    }
    while (j >= i && rows_[b][word[static_cast<std::size_t>(j)] ^ 1] >= 0)
      b = static_cast<std::size_t>(
          rows_[b][word[static_cast<std::size_t>(j--)] ^ 1]);
    if (j < i) {
      if (f != b) coincide(f, b);
      return;
    }
    const std::size_t d = word[static_cast<std::size_t>(i)];
    if (j == i) {
      // gap of one: deduction
      rows_[f][d] = static_cast<std::int64_t>(b);
      rows_[b][d ^ 1] = static_cast<std::int64_t>(f);
      return;
    }
    define(f, d);
  }
}

std::vector<std::size_t> CosetTable::live_cosets() const {
  std::vector<std::size_t> out;
  out.reserve(live_);
  for (std::size_t c = 0; c < parent_.size(); ++c)
    if (parent_[c] == c) out.push_back(c);
  return out;
}

std::vector<std::size_t> word_directions(const Word& w) {
  std::vector<std::size_t> dirs;
  dirs.reserve(w.size());
  for (const Letter& l : w.letters())
    dirs.push_back(2 * l.gen + (l.sign < 0 ? 1 : 0));
  return dirs;
}

EnumerationResult enumerate(const Presentation& p,
                            const std::vector<Word>& subgroup_generators,
                            const EnumerationLimits& limits) {
  CosetTable t(p.num_generators());
  std::vector<std::vector<std::size_t>> rel_dirs;
  rel_dirs.reserve(p.num_relators());
  for (const Word& r : p.relators()) rel_dirs.push_back(word_directions(r));
  std::vector<std::vector<std::size_t>> sub_dirs;
  for (const Word& w : subgroup_generators) {
    if (!(*w.alphabet() == *p.alphabet()))
      throw alphabet_error("subgroup generator over a different alphabet");
    sub_dirs.push_back(word_directions(reduce(w)));
  }

  bool completed = true;
  try {
    auto check_limits = [&] {
      if (t.num_defined() >= limits.max_defined ||
          t.num_live() >= limits.max_live)
        throw limit_reached{};
    };
    for (const auto& w : sub_dirs) {
      check_limits();
      t.scan_and_fill(0, w);
    }
    for (std::size_t c = 0; c < t.num_defined(); ++c) {
      if (!t.is_live(c)) continue;
      for (const auto& w : rel_dirs) {
        if (!t.is_live(c)) break;
        check_limits();
        t.scan_and_fill(c, w);
      }
      if (!t.is_live(c)) continue;
      for (std::size_t d = 0; d < 2 * p.num_generators(); ++d) {
        if (t.entry(c, d) < 0) {
          check_limits();
          t.define(c, d);
        }
      }
    }
  } catch (const limit_reached&) {
    completed = false;
  }

  EnumerationResult result{completed,
                           completed ? t.num_live() : 0,
                           t.num_live(),
                           t.num_defined(),
                           t.stats,
                           std::move(t)};
  return result;
}

TableVerification verify_table(const CosetTable& t, const Presentation& p) {
  if (t.num_generators() != p.num_generators())
    return {false, "table generator count does not match the presentation"};
  const std::vector<std::size_t> live = t.live_cosets();
  for (std::size_t c : live) {
    for (std::size_t d = 0; d < 2 * t.num_generators(); ++d) {
      const std::int64_t img = t.entry(c, d);
      if (img < 0)
        return {false, "undefined entry at coset " + std::to_string(c + 1)};
      const std::size_t ic = static_cast<std::size_t>(img);
      if (ic >= t.num_defined() || !t.is_live(ic))
        return {false, "entry at coset " + std::to_string(c + 1) +
                           " points to a dead coset"};
      if (t.entry(ic, d ^ 1) != static_cast<std::int64_t>(c))
        return {false, "actions not mutually inverse at coset " +
                           std::to_string(c + 1)};
    }
  }
  for (std::size_t c : live) {
    for (std::size_t ri = 0; ri < p.num_relators(); ++ri) {
      std::size_t x = c;
      for (std::size_t d : word_directions(p.relator(ri))) {
        const std::int64_t img = t.entry(x, d);
        if (img < 0)
          return {false, "relator " + std::to_string(ri + 1) +
                             " runs into an undefined entry"};
        x = static_cast<std::size_t>(img);
      }
      if (x != c)
        return {false, "relator " + std::to_string(ri + 1) +
                           " does not close at coset " + std::to_string(c + 1)};
    }
  }
  return {true, "ok"};
}

std::string CosetTable::dump(const Alphabet& alphabet) const {
  if (alphabet.size() != ngens_)
    throw error("alphabet size does not match the table");
  // Live cosets are renumbered 1..n in id order, so dumps are loadable
  // regardless of which ids survived coincidences.
  const std::vector<std::size_t> live = live_cosets();
  std::vector<std::size_t> number(rows_.size(), 0);
  for (std::size_t k = 0; k < live.size(); ++k) number[live[k]] = k + 1;
  std::ostringstream out;
  out << "coset";
  for (std::size_t g = 0; g < ngens_; ++g) out << ' ' << alphabet.name(g);
  out << '\n';
  for (std::size_t c : live) {
    out << number[c];
    for (std::size_t g = 0; g < ngens_; ++g) {
      const std::int64_t img = rows_[c][2 * g];
      if (img < 0 || number[static_cast<std::size_t>(img)] == 0)
        out << " -";
      else
        out << ' ' << number[static_cast<std::size_t>(img)];
    }
    out << '\n';
  }
  return out.str();
}

CosetTable CosetTable::parse_table(const std::string& text,
                                   const Alphabet& alphabet) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw error("empty coset table dump");
  {
    std::istringstream hs(header);
    std::string tok;
    hs >> tok;
    if (tok != "coset") throw error("bad coset table header");
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
      hs >> tok;
      if (tok != alphabet.name(g))
        throw error("coset table header does not match the alphabet");
    }
  }
  struct Row {
    std::size_t id;
    std::vector<std::int64_t> img;
  };
  std::vector<Row> entries;
  std::size_t max_id = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Row row;
    if (!(ls >> row.id) || row.id == 0) throw error("bad coset id in dump");
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
      std::string tok;
      if (!(ls >> tok)) throw error("truncated coset table row");
      row.img.push_back(tok == "-" ? -1 : std::stoll(tok));
    }
    max_id = std::max(max_id, row.id);
    for (std::int64_t v : row.img)
      if (v > 0) max_id = std::max(max_id, static_cast<std::size_t>(v));
    entries.push_back(std::move(row));
  }
  CosetTable t(alphabet.size());
  t.rows_.assign(max_id, std::vector<std::int64_t>(2 * alphabet.size(), -1));
  t.parent_.resize(max_id);
  for (std::size_t c = 0; c < max_id; ++c) t.parent_[c] = c;
  t.live_ = max_id;
  for (const Row& row : entries) {
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
      const std::int64_t img = row.img[g];
      if (img <= 0) continue;
      t.rows_[row.id - 1][2 * g] = img - 1;
      // Mirror entries: last writer wins; verify_table reports conflicts.
      if (t.rows_[static_cast<std::size_t>(img) - 1][2 * g + 1] < 0)
        t.rows_[static_cast<std::size_t>(img) - 1][2 * g + 1] =
            static_cast<std::int64_t>(row.id) - 1;
    }
  }
  return t;
}

}  // namespace fpg
