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

#include "fpg/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fpg {
namespace oracle {

namespace {

using Table = std::vector<std::vector<std::uint8_t>>;

GroupModel from_table(std::string name, Table mul) {
  GroupModel g{std::move(name), std::move(mul), {}};
  g.inverse.resize(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b)
      if (g.mul[a][b] == 0) {
        g.inverse[a] = static_cast<std::uint8_t>(b);
        break;
      }
  }
  return g;
}

GroupModel cyclic(std::size_t n) {
  Table t(n, std::vector<std::uint8_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = static_cast<std::uint8_t>((a + b) % n);
  return from_table("C" + std::to_string(n), std::move(t));
}

GroupModel product(const GroupModel& g, const GroupModel& h) {
  const std::size_t n = g.order() * h.order();
  Table t(n, std::vector<std::uint8_t>(n));
  auto enc = [&](std::size_t a, std::size_t b) {
    return a * h.order() + b;
  };
  for (std::size_t a1 = 0; a1 < g.order(); ++a1)
    for (std::size_t b1 = 0; b1 < h.order(); ++b1)
      for (std::size_t a2 = 0; a2 < g.order(); ++a2)
        for (std::size_t b2 = 0; b2 < h.order(); ++b2)
          t[enc(a1, b1)][enc(a2, b2)] = static_cast<std::uint8_t>(
              enc(g.mul[a1][a2], h.mul[b1][b2]));
  return from_table(g.name + "x" + h.name, std::move(t));
}

// Dihedral group of order 2n: elements (i, r) with i mod n, r in {0,1};
// (i,0)(k,l) = (i+k, l); (i,1)(k,l) = (i-k, 1-l).
GroupModel dihedral(std::size_t n) {
  const std::size_t order = 2 * n;
  Table t(order, std::vector<std::uint8_t>(order));
  auto enc = [&](std::size_t i, std::size_t r) { return r * n + i; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          std::size_t idx = r == 0 ? (i + k) % n : (i + n - k) % n;
          t[enc(i, r)][enc(k, l)] = static_cast<std::uint8_t>(enc(idx, r ^ l));
        }
  return from_table("D" + std::to_string(n), std::move(t));
}

// Dicyclic group of order 4n: elements (i, r) with i mod 2n, r in {0,1};
// (i,0)(k,l) = (i+k, l); (i,1)(k,0) = (i-k, 1); (i,1)(k,1) = (i-k+n, 0).
// n = 2 is the quaternion group.
GroupModel dicyclic(std::size_t n) {
  const std::size_t m = 2 * n;
  Table t(2 * m, std::vector<std::uint8_t>(2 * m));
  auto enc = [&](std::size_t i, std::size_t r) { return r * m + i; };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          std::size_t idx;
          if (r == 0)
            idx = (i + k) % m;
          else
            idx = l == 0 ? (i + m - k) % m : (i + m - k + n) % m;
          t[enc(i, r)][enc(k, l)] = static_cast<std::uint8_t>(enc(idx, r ^ l));
        }
  return from_table(n == 2 ? std::string("Q8") : "Dic" + std::to_string(n),
                    std::move(t));
}

// Closure of permutation generators, multiplication by composition.
GroupModel from_permutations(std::string name,
                             std::vector<std::vector<std::uint8_t>> gens) {
  const std::size_t deg = gens.front().size();
  std::vector<std::uint8_t> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<std::uint8_t>> elems{id};
  auto compose = [&](const std::vector<std::uint8_t>& p,
                     const std::vector<std::uint8_t>& q) {
    std::vector<std::uint8_t> out(deg);
    for (std::size_t i = 0; i < deg; ++i) out[i] = p[q[i]];
    return out;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto e = compose(g, elems[i]);
      if (std::find(elems.begin(), elems.end(), e) == elems.end())
        elems.push_back(std::move(e));
    }
  const std::size_t n = elems.size();
  Table t(n, std::vector<std::uint8_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto e = compose(elems[a], elems[b]);
      auto it = std::find(elems.begin(), elems.end(), e);
      t[a][b] = static_cast<std::uint8_t>(it - elems.begin());
    }
  return from_table(std::move(name), std::move(t));
}

std::vector<GroupModel> build_models() {
  std::vector<GroupModel> out;
  for (std::size_t n = 1; n <= 12; ++n) out.push_back(cyclic(n));
  out.push_back(product(cyclic(2), cyclic(2)));
  out.push_back(product(cyclic(4), cyclic(2)));
  out.push_back(product(cyclic(2), product(cyclic(2), cyclic(2))));
  out.push_back(product(cyclic(3), cyclic(3)));
  out.push_back(product(cyclic(6), cyclic(2)));
  out.push_back(from_permutations("S3", {{1, 2, 0}, {1, 0, 2}}));
  out.push_back(dihedral(4));
  out.push_back(dihedral(5));
  out.push_back(dihedral(6));
  out.push_back(from_permutations("A4", {{1, 2, 0, 3}, {0, 2, 3, 1}}));
  out.push_back(dicyclic(2));  // Q8
  out.push_back(dicyclic(3));
  return out;
}

std::size_t eval_word(const GroupModel& g, const Word& w,
                      const std::vector<std::uint8_t>& images) {
  std::size_t acc = 0;
  for (const Letter& l : w.letters()) {
    std::uint8_t x = images[l.gen];
    if (l.sign < 0) x = g.inverse[x];
    acc = g.mul[acc][x];
  }
  return acc;
}

std::size_t image_order(const GroupModel& g,
                        const std::vector<std::uint8_t>& images) {
  std::set<std::uint8_t> seen{0};
  std::vector<std::uint8_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::uint8_t> next;
    for (std::uint8_t x : frontier)
      for (std::uint8_t img : images) {
        std::uint8_t y = g.mul[img][x];
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

bool GroupModel::check_axioms() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a)
    if (mul[0][a] != a || mul[a][0] != a) return false;
  for (std::size_t a = 0; a < n; ++a)
    if (mul[a][inverse[a]] != 0 || mul[inverse[a]][a] != 0) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) return false;
  return true;
}

const std::vector<GroupModel>& small_group_models() {
  static const std::vector<GroupModel> models = build_models();
  return models;
}

std::size_t max_quotient_order(const Presentation& p, std::size_t bound) {
  const std::size_t k = p.num_generators();
  std::size_t best = 1;
  for (const GroupModel& g : small_group_models()) {
    if (g.order() > bound || g.order() <= best) continue;
    // All image tuples, odometer-style.
    std::vector<std::uint8_t> images(k, 0);
    for (;;) {
      bool ok = true;
      for (const Word& r : p.relators())
        if (eval_word(g, r, images) != 0) {
          ok = false;
          break;
        }
      if (ok) best = std::max(best, image_order(g, images));
      std::size_t pos = 0;
      while (pos < k) {
        if (++images[pos] < g.order()) break;
        images[pos++] = 0;
      }
      if (pos == k) break;
    }
  }
  return best;
}

std::optional<std::size_t> cyclic_order(const Presentation& p) {
  if (p.num_generators() != 1) return std::nullopt;
  long long g = 0;
  for (const Word& r : p.relators()) {
    long long sum = 0;
    for (const Letter& l : r.letters()) sum += l.sign;
    g = std::gcd(g, sum);
  }
  if (g == 0) return std::nullopt;  // infinite cyclic
  return static_cast<std::size_t>(g < 0 ? -g : g);
}

}  // namespace oracle
}  // namespace fpg
