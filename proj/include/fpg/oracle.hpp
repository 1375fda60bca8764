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

// Brute-force cross-check oracle, kept independent of the coset enumerator:
// it shares only the word and presentation data types. Verification code and
// tests compare enumeration results against it.

#ifndef FPG_ORACLE_HPP
#define FPG_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg {
namespace oracle {

/// A finite group as an explicit multiplication table. Element 0 is the
/// identity; mul[a][b] is the product.
struct GroupModel {
  std::string name;
  std::vector<std::vector<std::uint8_t>> mul;
  std::vector<std::uint8_t> inverse;

  std::size_t order() const { return mul.size(); }
  bool check_axioms() const;  // identity, inverses, associativity
};

/// Every group of order at most 12, one model per isomorphism class
/// (24 models: cyclic, elementary/product abelian, dihedral, alternating,
/// quaternion and dicyclic).
const std::vector<GroupModel>& small_group_models();

/// The largest order of a homomorphic image of the presented group among
/// the models above, by exhaustive search over generator images. For a
/// finite group of order at most `bound` this is exactly the group order.
std::size_t max_quotient_order(const Presentation& p, std::size_t bound = 12);

/// Order of a one-generator presented group by pure arithmetic: the gcd of
/// the relator exponent sums (nullopt means infinite).
std::optional<std::size_t> cyclic_order(const Presentation& p);

}  // namespace oracle
}  // namespace fpg

#endif  // FPG_ORACLE_HPP
