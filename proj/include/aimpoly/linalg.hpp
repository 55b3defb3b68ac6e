#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "aimpoly/scalar.hpp"

namespace aimpoly {

/// Dense row-major matrix over Q, sized for the small coefficient systems
/// that arise from polynomial ansatz equations.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// In-place reduced row echelon form; returns the pivot column of each pivot row.
  std::vector<std::size_t> reduce() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t pivot = row;
      while (pivot < rows_ && (*this)(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) continue;
      swap_rows(pivot, row);
      Scalar inv = (*this)(row, col).inverse();
      for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || (*this)(r, col).is_zero()) continue;
        Scalar f = (*this)(r, col);
        for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) -= f * (*this)(row, c);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Basis of { v : M v = 0 }, one vector per free column, with a 1 in that column.
inline std::vector<std::vector<Scalar>> nullspace(RationalMatrix m) {
  const auto pivots = m.reduce();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::size_t rank(RationalMatrix m) { return m.reduce().size(); }

}  // namespace aimpoly
