// Copyright 2026 The belldisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELLDISC_GF2_MATRIX_HPP
#define BELLDISC_GF2_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "belldisc/bitstring.hpp"

namespace belldisc {

/// Dense matrix over F2; rows are BitStrings of a common width. Row count
/// may be zero (the width is still tracked so kernels stay well-defined).
class GF2Matrix {
 public:
  explicit GF2Matrix(std::size_t n_cols) : n_cols_(n_cols) {}
  explicit GF2Matrix(std::vector<BitString> rows);

  std::size_t n_rows() const { return rows_.size(); }
  std::size_t n_cols() const { return n_cols_; }
  const BitString &row(std::size_t i) const { return rows_.at(i); }
  const std::vector<BitString> &rows() const { return rows_; }

  void append_row(BitString row);

  friend bool operator==(const GF2Matrix &a, const GF2Matrix &b) {
    return a.n_cols_ == b.n_cols_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t n_cols_;
  std::vector<BitString> rows_;
};

/// Row rank by Gaussian elimination; pivots are chosen at the lowest set
/// bit of each remaining row, scanning columns in increasing order.
std::size_t rank(const GF2Matrix &m);

/// Reduced row echelon form with zero rows dropped. Unique per row space,
/// so it doubles as a canonical form.
GF2Matrix rref(const GF2Matrix &m);

/// Basis of {x : Mx = 0} as rows; n_cols(M) - rank(M) of them.
GF2Matrix kernel_basis(const GF2Matrix &m);

/// Standard matrix-vector product over F2.
BitString mat_vec(const GF2Matrix &m, const BitString &x);

/// A particular solution of Mx = y, or nullopt when the system is
/// inconsistent.
std::optional<BitString> solve(const GF2Matrix &m, const BitString &y);

}  // namespace belldisc

#endif
