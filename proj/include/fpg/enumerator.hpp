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

#ifndef FPG_ENUMERATOR_HPP
#define FPG_ENUMERATOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg {

struct EnumerationLimits {
  std::size_t max_defined = 1'000'000;
  std::size_t max_live = 1'000'000;
};

struct EnumerationStats {
  std::size_t cosets_defined = 0;
  std::size_t coincidences = 0;
  std::size_t relator_scans = 0;

  friend bool operator==(const EnumerationStats&,
                         const EnumerationStats&) = default;
};

/// Partial action table of generators on cosets. Directions are encoded as
/// 2*gen for the generator and 2*gen+1 for its inverse; entries of -1 are
/// undefined. Coset ids are never reused; a union-find structure tracks
/// coincidences, and a coset is live iff it is its own representative.
class CosetTable {
 public:
  explicit CosetTable(std::size_t num_generators);

  std::size_t num_generators() const { return ngens_; }
  std::size_t num_defined() const { return rows_.size(); }
  std::size_t num_live() const { return live_; }
  bool is_live(std::size_t c) const { return parent_[c] == c; }
  std::size_t representative(std::size_t c) const;

  /// Action entry, or -1 if undefined. dir = 2*gen [+1 for the inverse].
  std::int64_t entry(std::size_t coset, std::size_t dir) const {
    return rows_[coset][dir];
  }
  void set_entry(std::size_t coset, std::size_t dir, std::int64_t value) {
    rows_[coset][dir] = value;
  }

  std::size_t define(std::size_t coset, std::size_t dir);

  /// Merges two cosets and processes the resulting cascade. Never increases
  /// the number of live cosets.
  void coincide(std::size_t a, std::size_t b);

  /// Scans one relator (as a direction sequence) at a coset, defining new
  /// cosets to bridge a gap of two or more, closing a gap of one with a
  /// deduction, and recording a coincidence on mismatch.
  void scan_and_fill(std::size_t coset, const std::vector<std::size_t>& word);

  std::vector<std::size_t> live_cosets() const;

  /// One row per live coset: 1-based coset id, then the image under each
  /// generator. Loadable by parse_table.
  std::string dump(const Alphabet& alphabet) const;
  static CosetTable parse_table(const std::string& text,
                                const Alphabet& alphabet);

  EnumerationStats stats;

 private:
  std::size_t find(std::size_t c);
  void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue);

  std::size_t ngens_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> parent_;
  std::size_t live_ = 0;
};

struct EnumerationResult {
  bool completed = false;
  std::size_t index = 0;       // subgroup index when completed
  std::size_t live_cosets = 0;
  std::size_t defined_cosets = 0;
  EnumerationStats stats;
  CosetTable table;
};

/// HLT-style coset enumeration of the subgroup generated by the given words
/// (trivial subgroup when empty). Relators are scanned in presentation
/// order at each live coset in increasing id order, so runs are
/// deterministic. Exceeding the limits yields an exhausted (non-completed)
/// result, not an error.
EnumerationResult enumerate(const Presentation& p,
                            const std::vector<Word>& subgroup_generators = {},
                            const EnumerationLimits& limits = {});

struct TableVerification {
  bool ok = false;
  std::string diagnostic;
};

/// Strategy-independent certificate check: the table must be complete on
/// live cosets, actions mutually inverse, and every relator must trace to a
/// closed cycle at every live coset.
TableVerification verify_table(const CosetTable& t, const Presentation& p);

/// Relator as a direction sequence over the table encoding.
std::vector<std::size_t> word_directions(const Word& w);

}  // namespace fpg

#endif  // FPG_ENUMERATOR_HPP
