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

#include "belldisc/gf2_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace belldisc {

namespace {

// Shared elimination core: brings `rows` to reduced row echelon form in
// place (word-parallel XOR of rows), returns the pivot columns in order.
// An optional right-hand side receives the same row operations.
std::vector<std::size_t> reduce(std::vector<BitString> &rows,
                                std::size_t n_cols,
                                std::vector<BitString> *rhs = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < n_cols && next_row < rows.size(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next_row], rows[pivot]);
    if (rhs) std::swap((*rhs)[next_row], (*rhs)[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next_row && rows[r].get(col)) {
        rows[r] ^= rows[next_row];
        if (rhs) (*rhs)[r] ^= (*rhs)[next_row];
      }
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

}  // namespace

GF2Matrix::GF2Matrix(std::vector<BitString> rows) : n_cols_(0) {
  if (rows.empty())
    throw std::invalid_argument("GF2Matrix: use GF2Matrix(n_cols) for empty");
  n_cols_ = rows.front().length();
  for (const auto &r : rows)
    if (r.length() != n_cols_)
      throw std::invalid_argument("GF2Matrix: ragged rows");
  rows_ = std::move(rows);
}

void GF2Matrix::append_row(BitString row) {
  if (row.length() != n_cols_)
    throw std::invalid_argument("GF2Matrix::append_row: width mismatch");
  rows_.push_back(std::move(row));
}

std::size_t rank(const GF2Matrix &m) {
  std::vector<BitString> rows = m.rows();
  return reduce(rows, m.n_cols()).size();
}

GF2Matrix rref(const GF2Matrix &m) {
  std::vector<BitString> rows = m.rows();
  std::size_t r = reduce(rows, m.n_cols()).size();
  GF2Matrix out(m.n_cols());
  for (std::size_t i = 0; i < r; ++i) out.append_row(std::move(rows[i]));
  return out;
}

GF2Matrix kernel_basis(const GF2Matrix &m) {
  std::vector<BitString> rows = m.rows();
  std::vector<std::size_t> pivots = reduce(rows, m.n_cols());

  std::vector<bool> is_pivot(m.n_cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  GF2Matrix basis(m.n_cols());
  for (std::size_t free_col = 0; free_col < m.n_cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    BitString v(m.n_cols());
    v.set(free_col, true);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (rows[i].get(free_col)) v.set(pivots[i], true);
    basis.append_row(std::move(v));
  }
  return basis;
}

BitString mat_vec(const GF2Matrix &m, const BitString &x) {
  if (x.length() != m.n_cols())
    throw std::invalid_argument("mat_vec: dimension mismatch");
  BitString y(m.n_rows());
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    if (m.row(i).dot(x)) y.set(i, true);
  return y;
}

std::optional<BitString> solve(const GF2Matrix &m, const BitString &y) {
  if (y.length() != m.n_rows())
    throw std::invalid_argument("solve: rhs length mismatch");
  std::vector<BitString> rows = m.rows();
  // Carry the rhs as length-1 rows so `reduce` can mirror the row ops.
  std::vector<BitString> rhs(m.n_rows(), BitString(1));
  for (std::size_t i = 0; i < m.n_rows(); ++i) rhs[i].set(0, y.get(i));

  std::vector<std::size_t> pivots = reduce(rows, m.n_cols(), &rhs);
  for (std::size_t i = pivots.size(); i < rows.size(); ++i)
    if (rhs[i].get(0)) return std::nullopt;

  BitString x(m.n_cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (rhs[i].get(0)) x.set(pivots[i], true);
  return x;
}

}  // namespace belldisc
