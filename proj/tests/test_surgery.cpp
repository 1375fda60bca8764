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

#include "fpg/surgery.hpp"

#include <doctest.h>

using namespace fpg;

TEST_CASE("log transform matrix shape") {
  GluingMatrix m1 = log_transform_matrix(1);
  CHECK(m1.m == std::array<std::array<std::int64_t, 3>, 3>{
                    {{1, 0, 0}, {0, 1, -1}, {0, 1, 0}}});

  // column action at p=0: b -> c, c -> -b
  GluingMatrix m0 = log_transform_matrix(0);
  std::array<std::int64_t, 3> b{0, 1, 0}, c{0, 0, 1};
  auto apply = [&](const GluingMatrix& g, const std::array<std::int64_t, 3>& v) {
    std::array<std::int64_t, 3> out{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out[i] += g.m[i][j] * v[j];
    return out;
  };
  CHECK(apply(m0, b) == c);
  CHECK(apply(m0, c) == std::array<std::int64_t, 3>{0, -1, 0});
}

TEST_CASE("determinant is one for every parameter") {
  for (std::int64_t p = -5; p <= 5; ++p)
    CHECK(determinant(log_transform_matrix(p)) == 1);
}

TEST_CASE("luttinger flag") {
  CHECK(is_luttinger(1));
  CHECK(is_luttinger(-1));
  CHECK_FALSE(is_luttinger(0));
  CHECK_FALSE(is_luttinger(2));
}

TEST_CASE("compose and invert") {
  GluingMatrix id = GluingMatrix::identity();
  GluingMatrix m = log_transform_matrix(3);
  CHECK(compose(id, m) == m);
  CHECK(compose(m, id) == m);
  CHECK(compose(m, invert(m)) == id);
  CHECK(compose(invert(m), m) == id);
  CHECK(invert(invert(m)) == m);

  // associativity on a few products
  GluingMatrix a = log_transform_matrix(-2);
  GluingMatrix b = log_transform_matrix(5);
  CHECK(compose(compose(a, b), m) == compose(a, compose(b, m)));

  GluingMatrix singular;
  singular.m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}};
  CHECK_THROWS_AS(invert(singular), error);
}
