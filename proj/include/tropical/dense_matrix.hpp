#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tropical/errors.hpp"
#include "tropical/semiring.hpp"

namespace tropical {

/**
 * Dense row-major m x n matrix of TropicalValue, m >= 1 and n >= 1.
 *
 * Indexing is 0-based; the text format and CLI documentation use the
 * 1-based (row, column) convention of the printed tables.
 */
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, TropicalValue fill = E)
      : rows_(rows), cols_(cols), entries_(checked_size(rows, cols), fill) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<TropicalValue> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != checked_size(rows, cols))
      throw std::invalid_argument("Matrix: entry count does not match " + to_string(shape()));
  }

  /// Builds from nested rows; all rows must have the same length.
  Matrix(std::initializer_list<std::initializer_list<TropicalValue>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(checked_size(rows_, cols_));
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Shape shape() const noexcept { return {rows_, cols_}; }
  bool is_square() const noexcept { return rows_ == cols_; }

  TropicalValue operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }
  TropicalValue& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }

  TropicalValue at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix::at: index out of range");
    return (*this)(i, j);
  }

  std::span<const TropicalValue> row(std::size_t i) const noexcept {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<TropicalValue> row(std::size_t i) noexcept { return {entries_.data() + i * cols_, cols_}; }

  std::span<const TropicalValue> entries() const noexcept { return entries_; }
  std::span<TropicalValue> entries() noexcept { return entries_; }

  bool operator==(const Matrix&) const = default;

 private:
  static std::size_t checked_size(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("Matrix: dimensions must be positive");
    return rows * cols;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<TropicalValue> entries_;
};

}  // namespace tropical
