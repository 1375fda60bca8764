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

#ifndef FPG_CORPUS_HPP
#define FPG_CORPUS_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fpg/presentation.hpp"
#include "fpg/proofcheck.hpp"

namespace fpg {

struct CorpusEntry {
  std::string path;
  std::string kind;  // "presentation" or "proof"
  std::string description;
};

/// A permutation as images of 0..degree-1.
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::size_t degree);
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
std::size_t closure_order(const std::vector<Permutation>& gens);

/// A homomorphism into a symmetric group, given by generator images.
/// Generators without an explicit image map to the identity.
struct QuotientMap {
  std::string name;
  std::size_t degree = 0;
  std::map<std::string, Permutation> images;
  std::size_t expected_image_order = 0;

  Permutation image(const Word& w) const;
  /// True iff every relator maps to the identity permutation.
  bool kills_all_relators(const Presentation& p) const;
  std::size_t image_order(const Presentation& p) const;
};

std::vector<QuotientMap> parse_quotient_maps(const std::string& text);

/// The checked-in data set: four presentations, the triviality proof bound
/// to m_displayed, the manifest, and the finite quotient maps.
struct Corpus {
  std::map<std::string, Presentation> presentations;
  ProofScript proof;
  std::vector<CorpusEntry> manifest;
  std::vector<QuotientMap> quotient_maps;

  const Presentation& presentation(const std::string& name) const;
};

Corpus load_corpus(const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& path);

}  // namespace fpg

#endif  // FPG_CORPUS_HPP
