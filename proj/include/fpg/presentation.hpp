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

#ifndef FPG_PRESENTATION_HPP
#define FPG_PRESENTATION_HPP

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "fpg/word.hpp"

namespace fpg {

struct tietze_error : error {
  using error::error;
};

/// A finite presentation: an alphabet plus an ordered relator list. Relators
/// are stored freely reduced; relators that reduce to the empty word are
/// dropped on construction.
class Presentation {
 public:
  explicit Presentation(AlphabetPtr alphabet);
  Presentation(AlphabetPtr alphabet, std::vector<Word> relators);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Word>& relators() const { return relators_; }
  const Word& relator(std::size_t i) const { return relators_.at(i); }
  std::size_t num_generators() const { return alphabet_->size(); }
  std::size_t num_relators() const { return relators_.size(); }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return (*a.alphabet_ == *b.alphabet_) && a.relators_ == b.relators_;
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<Word> relators_;
};

/// Canonical representative of a relator up to conjugation and inversion:
/// the lexicographically least rotation of the cyclic core or its inverse.
Word relator_normal_form(const Word& w);

// ---- Tietze moves -------------------------------------------------------

struct CertFactor {
  Word conjugator;
  std::size_t relator_index;
  int exponent;  // +1 or -1
};

struct TietzeEliminate {
  std::string generator;
  std::size_t relator_index;
  Word definition;  // generator = definition, over the pre-move alphabet
};

struct TietzeRemoveDuplicate {
  std::size_t index;
};

struct TietzeRemoveTrivial {
  std::size_t index;
};

struct TietzeAddRelator {
  Word relator;
  std::vector<CertFactor> certificate;  // relator = prod conj(c_i, r_i^e_i)
};

struct TietzeAddGenerator {
  std::string name;
  Word definition;  // over the pre-move alphabet
};

using TietzeMove = std::variant<TietzeEliminate, TietzeRemoveDuplicate,
                                TietzeRemoveTrivial, TietzeAddRelator,
                                TietzeAddGenerator>;
using TietzeLog = std::vector<TietzeMove>;

Presentation apply_move(const Presentation& p, const TietzeMove& move);
Presentation replay(const Presentation& source, const TietzeLog& log);

/// The defining relator for a generator, if any: a relator that is, up to
/// cyclic rotation and inversion, of the form g*w with w free of g. Among
/// candidates the shortest relator wins, then the lowest index. Returns the
/// relator index and the word the generator equals (w^-1).
std::optional<std::pair<std::size_t, Word>> find_definition(
    const Presentation& p, std::uint32_t gen);

/// Rewrites every other relator with the definition read off the indicated
/// relator, then removes the generator and the defining relator. Throws
/// tietze_error if the relator is not of eliminable form for the generator.
std::pair<Presentation, TietzeMove> eliminate_generator(
    const Presentation& p, std::uint32_t gen, std::size_t relator_index);

struct SimplifyLimits {
  std::size_t max_eliminations = 10'000;
  std::size_t max_defining_length = SIZE_MAX;
};

/// Greedy simplification: drop duplicate relators (by normal form), then
/// repeatedly eliminate the generator with the shortest eliminable defining
/// relator (ties by generator order), until a fixed point or the limits.
std::pair<Presentation, TietzeLog> auto_simplify(
    const Presentation& p, const SimplifyLimits& limits = {});

struct PresentationDiff {
  std::size_t matched = 0;
  std::vector<Word> only_first;   // normal forms, over the first alphabet
  std::vector<Word> only_second;  // normal forms, over the second alphabet
  bool empty() const { return only_first.empty() && only_second.empty(); }
};

/// Multiset comparison of relator normal forms, after renaming the first
/// presentation's generators by the given bijection (identity by default).
PresentationDiff diff_presentations(
    const Presentation& p1, const Presentation& p2,
    const std::map<std::string, std::string>& rename = {});

bool presentations_match(const Presentation& p1, const Presentation& p2,
                         const std::map<std::string, std::string>& rename = {});

}  // namespace fpg

#endif  // FPG_PRESENTATION_HPP
