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

namespace fpg {

GluingMatrix GluingMatrix::identity() {
  GluingMatrix out;
  for (int i = 0; i < 3; ++i) out.m[i][i] = 1;
  return out;
}

GluingMatrix log_transform_matrix(std::int64_t p) {
  GluingMatrix out;
  out.m = {{{1, 0, 0}, {0, p, -1}, {0, 1, 0}}};
  return out;
}

bool is_luttinger(std::int64_t p) { return p == 1 || p == -1; }

GluingMatrix compose(const GluingMatrix& m1, const GluingMatrix& m2) {
  GluingMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < 3; ++k) acc += m1.m[i][k] * m2.m[k][j];
      out.m[i][j] = acc;
    }
  return out;
}

std::int64_t determinant(const GluingMatrix& g) {
  const auto& m = g.m;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

GluingMatrix invert(const GluingMatrix& g) {
  const std::int64_t det = determinant(g);
  if (det != 1 && det != -1)
    throw error("gluing matrix is not unimodular (det " +
                std::to_string(det) + ")");
  const auto& m = g.m;
  GluingMatrix adj;
  adj.m[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  adj.m[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  adj.m[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  adj.m[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  adj.m[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  adj.m[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  adj.m[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  adj.m[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  adj.m[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det == -1)
    for (auto& row : adj.m)
      for (auto& x : row) x = -x;
  return adj;
}

std::string to_string(const GluingMatrix& g) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    out += i == 0 ? "[" : "\n[";
    for (int j = 0; j < 3; ++j) {
      if (j) out += ' ';
      out += std::to_string(g.m[i][j]);
    }
    out += "]";
  }
  return out;
}

}  // namespace fpg
