#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linrec/poly.hpp"
#include "linrec/ring.hpp"

namespace linrec {

/// Dense row-major matrix over a RingSpec.
class Matrix {
 public:
  /// Zero matrix. Throws DomainError on an empty shape.
  Matrix(RingSpec ring, std::size_t rows, std::size_t cols);
  /// Entries are reduced into the ring. Throws RingMismatch on a ragged grid.
  Matrix(RingSpec ring, const std::vector<std::vector<long>>& grid);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  RingElem at(std::size_t i, std::size_t j) const { return RingElem(raw(i, j), ring_); }
  const Integer& raw(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  /// Callers must store canonical representatives.
  Integer& raw(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  RingSpec ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> entries_;
};

Matrix identity(std::size_t n, const RingSpec& ring);

/// The companion matrix S_f: ones on the subdiagonal, last column -a_0..-a_{l-1}.
/// Throws DomainError unless f is monic of degree >= 1.
Matrix companion(const Poly& f);

Matrix kronecker(const Matrix& a, const Matrix& b);
/// A (x) E_n + E_m (x) B for square A (m x m), B (n x n).
Matrix kronecker_sum(const Matrix& a, const Matrix& b);

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_pow(const Matrix& a, std::uint64_t n);

inline Matrix operator+(const Matrix& a, const Matrix& b) { return mat_add(a, b); }
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// det(xE - M), computed with Berkowitz's division-free algorithm so that it is
/// valid over rings with zero divisors.
Poly char_poly(const Matrix& m);

/// p(M) by Horner's rule.
Matrix poly_eval(const Poly& p, const Matrix& m);

/// Rows of space-separated, right-aligned entries.
std::string to_string(const Matrix& m);

}  // namespace linrec
