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

#include "fpg/abelian.hpp"

#include <algorithm>
#include <utility>

namespace fpg {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const BigInt& k) {
  for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += k * at(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const BigInt& k) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += k * at(r, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw error("matrix dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : " [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m.at(i, j).str();
    }
    out += i + 1 < m.rows() ? "]\n" : "]";
  }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && a.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) =
            (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.num_relators(), p.num_generators());
  for (std::size_t i = 0; i < p.num_relators(); ++i)
    for (const Letter& l : p.relator(i).letters())
      m.at(i, l.gen) += l.sign;
  return m;
}

namespace {

bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  BigInt best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      BigInt v = abs(a.at(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t nmin = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < nmin; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(s, t, pi, pj)) break;
    s.swap_rows(t, pi);
    u.swap_rows(t, pi);
    s.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      // Clear column t below-diagonal and row t right-of-diagonal. Truncated
      // quotients leave remainders smaller than the pivot, so re-picking the
      // minimal entry terminates.
      bool dirty = false;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s.at(i, t) == 0) continue;
        BigInt q = s.at(i, t) / s.at(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s.at(t, j) == 0) continue;
        BigInt q = s.at(t, j) / s.at(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        find_pivot(s, t, pi, pj);
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        continue;
      }

      // Divisibility fix-up: the pivot must divide the whole submatrix.
      bool fixed = true;
      for (std::size_t i = t + 1; i < s.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < s.cols() && fixed; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            s.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }

    if (s.at(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

std::string to_string(const AbelianInvariants& inv) {
  std::string out = "torsion [";
  for (std::size_t i = 0; i < inv.torsion.size(); ++i) {
    if (i) out += ", ";
    out += inv.torsion[i].str();
  }
  out += "], free rank " + std::to_string(inv.free_rank);
  return out;
}

AbelianInvariants abelianize(const Presentation& p) {
  const SmithResult snf = smith_normal_form(relation_matrix(p));
  AbelianInvariants inv;
  const std::size_t nmin = std::min(snf.s.rows(), snf.s.cols());
  std::size_t rank = 0;
  for (std::size_t i = 0; i < nmin; ++i) {
    const BigInt& d = snf.s.at(i, i);
    if (d == 0) continue;
    ++rank;
    if (d >= 2) inv.torsion.push_back(d);
  }
  inv.free_rank = p.num_generators() - rank;
  return inv;
}

}  // namespace fpg
