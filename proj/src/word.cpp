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

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace fpg {

namespace {

std::vector<Letter> reduce_letters(std::vector<Letter> in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (const Letter& l : in) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign != l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

bool Alphabet::is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n))
      throw error("invalid generator name '" + n + "'");
    if (!seen.insert(n).second)
      throw error("duplicate generator name '" + n + "'");
  }
}

std::optional<std::uint32_t> Alphabet::index(std::string_view name) const {
  for (std::uint32_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::uint32_t Alphabet::index_or_throw(std::string_view name) const {
  if (auto i = index(name)) return *i;
  throw error("unknown generator '" + std::string(name) + "'");
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw error("word without alphabet");
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
    : Word(std::move(alphabet), std::move(letters), true) {}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters, bool reduce_now)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw error("word without alphabet");
  for (const Letter& l : letters_) {
    if (l.gen >= alphabet_->size())
      throw error("letter index out of range for alphabet");
    if (l.sign != 1 && l.sign != -1) throw error("letter sign must be +1/-1");
  }
  if (reduce_now) letters_ = reduce_letters(std::move(letters_));
}

Word Word::raw(AlphabetPtr alphabet, std::vector<Letter> letters) {
  return Word(std::move(alphabet), std::move(letters), false);
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i].gen == letters_[i - 1].gen &&
        letters_[i].sign != letters_[i - 1].sign)
      return false;
  return true;
}

void check_same_alphabet(const Word& u, const Word& v) {
  if (u.alphabet() == v.alphabet()) return;
  if (*u.alphabet() == *v.alphabet()) return;
  throw alphabet_error("words lie over incompatible alphabets");
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& la = a.letters();
  const auto& lb = b.letters();
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i] != lb[i]) return letter_less(la[i], lb[i]);
  }
  return false;
}

Word reduce(const Word& w) {
  return Word(w.alphabet(), w.letters());
}

Word multiply(const Word& u, const Word& v) {
  check_same_alphabet(u, v);
  std::vector<Letter> ls = u.letters();
  ls.insert(ls.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), std::move(ls));
}

Word invert(const Word& w) {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    ls.push_back(it->inverse());
  return Word(w.alphabet(), std::move(ls));
}

Word commutator(const Word& u, const Word& v) {
  check_same_alphabet(u, v);
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

Word conjugate(const Word& by, const Word& w) {
  check_same_alphabet(by, w);
  return multiply(multiply(by, w), invert(by));
}

Word pow(const Word& w, long exponent) {
  Word base = exponent < 0 ? invert(w) : w;
  long n = exponent < 0 ? -exponent : exponent;
  Word acc(w.alphabet());
  for (long i = 0; i < n; ++i) acc = multiply(acc, base);
  return acc;
}

Word substitute(const Word& w, std::uint32_t gen, const Word& r) {
  check_same_alphabet(w, r);
  for (const Letter& l : r.letters())
    if (l.gen == gen)
      throw substitution_error("cyclic definition: replacement for '" +
                               w.alphabet()->name(gen) +
                               "' mentions the generator itself");
  std::vector<Letter> out;
  out.reserve(w.size());
  const Word r_inv = invert(r);
  for (const Letter& l : w.letters()) {
    if (l.gen != gen) {
      out.push_back(l);
      continue;
    }
    const Word& rep = l.sign > 0 ? r : r_inv;
    out.insert(out.end(), rep.letters().begin(), rep.letters().end());
  }
  return Word(w.alphabet(), std::move(out));
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::vector<Letter> core = w.letters();
  std::vector<Letter> pre;
  while (core.size() >= 2 && core.front().gen == core.back().gen &&
         core.front().sign != core.back().sign) {
    pre.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return {Word(w.alphabet(), std::move(core)),
          Word(w.alphabet(), std::move(pre))};
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long n = static_cast<long>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += w.alphabet()->name(ls[i].gen);
    if (n != 1) out += "^" + std::to_string(n);
    i = j;
  }
  return out;
}

}  // namespace fpg
