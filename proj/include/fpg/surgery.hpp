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

#ifndef FPG_SURGERY_HPP
#define FPG_SURGERY_HPP

#include <array>
#include <cstdint>
#include <string>

#include "fpg/word.hpp"

namespace fpg {

/// Integer matrix acting on column vectors over the ordered basis (a, b, c)
/// of the first homology of the 3-torus.
struct GluingMatrix {
  std::array<std::array<std::int64_t, 3>, 3> m{};

  static GluingMatrix identity();

  friend bool operator==(const GluingMatrix&, const GluingMatrix&) = default;
};

/// The torus gluing of the p log transform: rows (1,0,0), (0,p,-1), (0,1,0).
/// On columns this fixes a and sends b to p*b + c and c to -b; the
/// determinant is 1 for every p.
GluingMatrix log_transform_matrix(std::int64_t p);

/// The p = +/-1 log transforms are the Luttinger surgeries.
bool is_luttinger(std::int64_t p);

GluingMatrix compose(const GluingMatrix& m1, const GluingMatrix& m2);
std::int64_t determinant(const GluingMatrix& m);

/// Exact integer inverse; requires determinant +/-1.
GluingMatrix invert(const GluingMatrix& m);

std::string to_string(const GluingMatrix& m);

}  // namespace fpg

#endif  // FPG_SURGERY_HPP
