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

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "fpg/parser.hpp"

namespace fpg {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open '" + path.string() + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[q[i]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint32_t>(i);
  return out;
}

std::size_t closure_order(const std::vector<Permutation>& gens) {
  if (gens.empty()) return 1;
  std::set<Permutation> seen{identity_permutation(gens.front().size())};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Permutation y = compose(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

Permutation QuotientMap::image(const Word& w) const {
  Permutation acc = identity_permutation(degree);
  for (const Letter& l : w.letters()) {
    auto it = images.find(w.alphabet()->name(l.gen));
    if (it == images.end()) continue;
    acc = compose(acc, l.sign > 0 ? it->second : inverse(it->second));
  }
  return acc;
}

bool QuotientMap::kills_all_relators(const Presentation& p) const {
  const Permutation id = identity_permutation(degree);
  for (const Word& r : p.relators())
    if (image(r) != id) return false;
  return true;
}

std::size_t QuotientMap::image_order(const Presentation& p) const {
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < p.num_generators(); ++g) {
    auto it = images.find(p.alphabet()->name(g));
    if (it != images.end()) gens.push_back(it->second);
  }
  if (gens.empty()) return 1;
  return closure_order(gens);
}

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  Permutation p = identity_permutation(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw error("expected '(' in cycle notation");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t v = 0;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw error("expected a point in cycle notation");
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::size_t>(text[i++] - '0');
      if (v == 0 || v > degree) throw error("cycle point out of range");
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::size_t from = cycle[k];
      std::size_t to = cycle[(k + 1) % cycle.size()];
      p[from] = static_cast<std::uint32_t>(to);
    }
    skip_ws();
  }
  return p;
}

}  // namespace

std::vector<QuotientMap> parse_quotient_maps(const std::string& text) {
  std::vector<QuotientMap> maps;
  std::istringstream in(text);
  std::string raw;
  QuotientMap cur;
  bool open = false;
  while (std::getline(in, raw)) {
    std::istringstream ls(strip_comment(raw));
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "map") {
      if (open) throw error("nested 'map' in quotient file");
      std::string kw;
      cur = QuotientMap{};
      if (!(ls >> cur.name >> kw >> cur.degree) || kw != "degree")
        throw error("expected 'map NAME degree N'");
      open = true;
    } else if (head == "end") {
      if (!open) throw error("'end' without 'map'");
      maps.push_back(std::move(cur));
      open = false;
    } else if (head == "expect_image_order") {
      if (!open || !(ls >> cur.expected_image_order))
        throw error("bad expect_image_order line");
    } else {
      if (!open) throw error("generator image outside a map block");
      std::string rest;
      std::getline(ls, rest);
      cur.images[head] = parse_cycles(rest, cur.degree);
    }
  }
  if (open) throw error("unterminated map block");
  return maps;
}

const Presentation& Corpus::presentation(const std::string& name) const {
  auto it = presentations.find(name);
  if (it == presentations.end())
    throw error("corpus has no presentation '" + name + "'");
  return it->second;
}

Corpus load_corpus(const std::filesystem::path& dir) {
  std::vector<CorpusEntry> manifest;
  {
    std::istringstream in(read_file(dir / "manifest.txt"));
    std::string raw;
    while (std::getline(in, raw)) {
      std::istringstream ls(strip_comment(raw));
      CorpusEntry e;
      if (!(ls >> e.path >> e.kind)) continue;
      std::getline(ls, e.description);
      if (!e.description.empty() && e.description.front() == ' ')
        e.description.erase(0, e.description.find_first_not_of(' '));
      manifest.push_back(std::move(e));
    }
  }
  if (manifest.empty()) throw error("empty corpus manifest");

  std::map<std::string, Presentation> presentations;
  std::string proof_text;
  std::string proof_name;
  for (const CorpusEntry& e : manifest) {
    const std::string text = read_file(dir / e.path);
    if (e.kind == "presentation") {
      presentations.emplace(e.path, parse_presentation(text));
    } else if (e.kind == "proof") {
      proof_text = text;
      proof_name = e.path;
    } else {
      throw error("unknown corpus kind '" + e.kind + "'");
    }
  }
  if (proof_text.empty()) throw error("corpus manifest lists no proof");

  auto it = presentations.find("m_displayed.grp");
  if (it == presentations.end())
    throw error("corpus manifest lists no m_displayed.grp");
  ProofScript proof = parse_proof(proof_text, it->second);

  std::vector<QuotientMap> quotients =
      parse_quotient_maps(read_file(dir / "e0_quotients.txt"));

  return Corpus{std::move(presentations), std::move(proof),
                std::move(manifest), std::move(quotients)};
}

}  // namespace fpg
