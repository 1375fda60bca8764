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

#ifndef FPG_WORD_HPP
#define FPG_WORD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fpg {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two words over different alphabets were combined.
struct alphabet_error : error {
  using error::error;
};

// A generator was defined in terms of itself.
struct substitution_error : error {
  using error::error;
};

/// An ordered set of named generators. Indices are stable for the lifetime
/// of the alphabet; names are distinct ASCII identifiers.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::uint32_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::uint32_t> index(std::string_view name) const;
  std::uint32_t index_or_throw(std::string_view name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

  static bool is_identifier(std::string_view s);

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

/// A signed generator symbol.
struct Letter {
  std::uint32_t gen;
  std::int8_t sign;  // +1 or -1

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Letter order used by normal forms: by generator index, positive before
// negative.
inline bool letter_less(const Letter& a, const Letter& b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  return a.sign > b.sign;
}

/// An immutable free-group word over a shared alphabet. All public
/// constructors freely reduce; raw() is the one unreduced entry point
/// (used by the parser and by tests that exercise reduction itself).
class Word {
 public:
  explicit Word(AlphabetPtr alphabet);
  Word(AlphabetPtr alphabet, std::vector<Letter> letters);

  static Word raw(AlphabetPtr alphabet, std::vector<Letter> letters);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_reduced() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_ &&
           (a.alphabet_ == b.alphabet_ || *a.alphabet_ == *b.alphabet_);
  }

 private:
  Word(AlphabetPtr alphabet, std::vector<Letter> letters, bool reduce_now);

  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

// Total order on words: length first, then letter_less lexicographic.
bool word_less(const Word& a, const Word& b);

Word reduce(const Word& w);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);

/// [u,v] = u v u^-1 v^-1.
Word commutator(const Word& u, const Word& v);

/// by * w * by^-1.
Word conjugate(const Word& by, const Word& w);

Word pow(const Word& w, long exponent);

/// Replaces every occurrence of the generator by r (and inverse occurrences
/// by r^-1), then reduces. r must not contain the generator.
Word substitute(const Word& w, std::uint32_t gen, const Word& r);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // w = conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);

/// "a b^-1 a^2" style rendering; "1" for the empty word. Runs of equal
/// letters collapse to powers.
std::string to_string(const Word& w);

void check_same_alphabet(const Word& u, const Word& v);

}  // namespace fpg

#endif  // FPG_WORD_HPP
