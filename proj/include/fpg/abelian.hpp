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

#ifndef FPG_ABELIAN_HPP
#define FPG_ABELIAN_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg {

// Intermediate entries in integer elimination grow without bound even for
// small inputs, so everything here is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t i);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> data_;
};

std::string to_string(const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& m);

/// One row per relator, one column per generator; entries are exponent sums.
IntMatrix relation_matrix(const Presentation& p);

struct SmithResult {
  IntMatrix s;  // diagonal, nonnegative, divisibility chain d1 | d2 | ...
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols;  s == u * m * v
};

SmithResult smith_normal_form(const IntMatrix& m);

struct AbelianInvariants {
  std::vector<BigInt> torsion;  // invariant factors >= 2, divisibility chain
  std::size_t free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;
};

std::string to_string(const AbelianInvariants& inv);

AbelianInvariants abelianize(const Presentation& p);

}  // namespace fpg

#endif  // FPG_ABELIAN_HPP
