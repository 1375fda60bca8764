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

#ifndef FPG_VERIFY_HPP
#define FPG_VERIFY_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "fpg/corpus.hpp"

namespace fpg {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The full reproduction suite over the checked-in corpus:
///   1  triviality of pi1(M) by coset enumeration (displayed and raw)
///   2  elimination reproduction for pi1(E0~)
///   3  elimination reproduction for pi1(M)
///   4  abelianizations
///   5  proof replay and single-fault rejection
///   6  enumerator vs brute-force oracle on the fixed small-group suite
///   7  Tietze-move invariance of order and abelian invariants
///   8  word-engine properties
///   9  log-transform gluing matrix
///  10  parser round-trip and fuzzing
std::vector<CriterionResult> run_paper_verification(
    const std::filesystem::path& corpus_dir);

/// The presentation obtained from e0_raw by eliminating f, b, p, d, k via
/// the short defining relators (exposed for tests and the CLI).
Presentation mechanical_e0(const Corpus& corpus);

/// The presentation obtained from m_raw by eliminating y, x and then the
/// five generators above.
Presentation mechanical_m(const Corpus& corpus);

}  // namespace fpg

#endif  // FPG_VERIFY_HPP
