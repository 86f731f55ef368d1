#pragma once

#include "lattice_equiv/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lattice_equiv {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntegerMatrix& m);

/// Rank over Q.
std::size_t rank(const IntegerMatrix& m);

/// Adjugate of a square matrix: adj(M) * M == det(M) * I.
IntegerMatrix adjugate(const IntegerMatrix& m);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Inverse of a nonsingular square matrix over Q (Gauss-Jordan).
RationalMatrix inverse(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);
RationalMatrix to_rational(const IntegerMatrix& m);

}  // namespace lattice_equiv
