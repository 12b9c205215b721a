#pragma once

#include "bsroots/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bsroots {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  /// Every row must have the same length.
  static QMatrix from_rows(const std::vector<QVector>& rows);
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  QVector column(std::size_t c) const;

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& o) const;
  QVector operator*(std::span<const Rational> v) const;
  bool is_zero() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  QVector data_;
};

/// Reduced row echelon form of a matrix together with its pivot columns.
struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(const QMatrix& m);
std::size_t matrix_rank(const QMatrix& m);
std::size_t rank_of_rows(const std::vector<QVector>& rows, std::size_t cols);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<QVector> nullspace(const QMatrix& m);

/// Horizontal concatenation [a | b]; both must have the same row count.
QMatrix hconcat(const QMatrix& a, const QMatrix& b);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace bsroots
