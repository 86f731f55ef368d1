#include "lattice_equiv/matrix.hpp"

#include "lattice_equiv/error.hpp"

#include <utility>

namespace lattice_equiv {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw LatticeError(ErrorKind::InvalidArgument, "ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw LatticeError(ErrorKind::DimensionMismatch, "matrix product shape");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

Integer determinant(const IntegerMatrix& input) {
  const std::size_t n = input.rows();
  if (n != input.cols()) throw LatticeError(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  if (n == 0) return 1;
  if (n == 1) return input.at(0, 0);
  if (n == 2) return input.at(0, 0) * input.at(1, 1) - input.at(0, 1) * input.at(1, 0);

  IntegerMatrix m = input;
  Integer prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k).is_zero()) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sgn < 0 ? Integer(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

std::size_t rank(const IntegerMatrix& input) {
  IntegerMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m.at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Integer a = m.at(r, c), b = m.at(i, c);
      Integer g = gcd(a, b);
      a /= g;
      b /= g;
      for (std::size_t j = c; j < cols; ++j) m.at(i, j) = m.at(i, j) * a - m.at(r, j) * b;
    }
    ++r;
  }
  return r;
}

IntegerMatrix adjugate(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw LatticeError(ErrorKind::DimensionMismatch, "adjugate of a non-square matrix");
  IntegerMatrix adj(n, n);
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  if (n == 2) {
    adj.at(0, 0) = m.at(1, 1);
    adj.at(0, 1) = -m.at(0, 1);
    adj.at(1, 0) = -m.at(1, 0);
    adj.at(1, 1) = m.at(0, 0);
    return adj;
  }
  IntegerMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc++) = m.at(r, c);
        }
        ++mr;
      }
      Integer cof = determinant(minor);
      // adj = transpose of the cofactor matrix
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : Integer(-cof);
    }
  return adj;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Rational(m.at(i, j));
  return out;
}

RationalMatrix inverse(const RationalMatrix& input) {
  const std::size_t n = input.size();
  RationalMatrix a = input;
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw LatticeError(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    inv[i][i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw LatticeError(ErrorKind::DegenerateInput, "singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Rational determinant(const RationalMatrix& input) {
  const std::size_t n = input.size();
  RationalMatrix a = input;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace lattice_equiv
