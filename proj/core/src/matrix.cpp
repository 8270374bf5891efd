#include "linrec/matrix.hpp"

#include <algorithm>

#include "linrec/error.hpp"

namespace linrec {

Matrix::Matrix(RingSpec ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
}

Matrix::Matrix(RingSpec ring, const std::vector<std::vector<long>>& grid)
    : Matrix(std::move(ring), grid.size(), grid.empty() ? 0 : grid.front().size()) {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (grid[i].size() != cols_) throw RingMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < cols_; ++j) raw(i, j) = ring_.reduce(Integer(grid[i][j]));
  }
}

Matrix identity(std::size_t n, const RingSpec& ring) {
  Matrix e(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) e.raw(i, i) = 1;
  return e;
}

Matrix companion(const Poly& f) {
  if (!is_monic(f) || f.degree() < 1) {
    throw DomainError("companion: polynomial must be monic of degree >= 1, got " + to_string(f));
  }
  const auto l = static_cast<std::size_t>(f.degree());
  const auto& R = f.ring();
  Matrix s(R, l, l);
  for (std::size_t i = 0; i + 1 < l; ++i) s.raw(i + 1, i) = 1;
  for (std::size_t i = 0; i < l; ++i) s.raw(i, l - 1) = R.neg(f.raw(i));
  return s;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring(), b.ring(), "kronecker");
  const auto& R = a.ring();
  Matrix out(R, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Integer& aij = a.raw(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out.raw(i * b.rows() + k, j * b.cols() + l) = R.mul(aij, b.raw(k, l));
        }
      }
    }
  }
  return out;
}

Matrix kronecker_sum(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square()) throw DomainError("kronecker_sum needs square matrices");
  require_same_ring(a.ring(), b.ring(), "kronecker_sum");
  return kronecker(a, identity(b.rows(), b.ring())) + kronecker(identity(a.rows(), a.ring()), b);
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring(), b.ring(), "mat_add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw RingMismatch("mat_add: shape mismatch");
  Matrix out(a.ring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.raw(i, j) = a.ring().add(a.raw(i, j), b.raw(i, j));
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring(), b.ring(), "mat_mul");
  if (a.cols() != b.rows()) throw RingMismatch("mat_mul: inner dimensions differ");
  const auto& R = a.ring();
  Matrix out(R, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Integer acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a.raw(i, k) * b.raw(k, j);
      out.raw(i, j) = R.reduce(std::move(acc));
    }
  }
  return out;
}

Matrix mat_pow(const Matrix& a, std::uint64_t n) {
  if (!a.is_square()) throw DomainError("mat_pow needs a square matrix");
  Matrix result = identity(a.rows(), a.ring());
  Matrix base = a;
  while (n) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

Poly char_poly(const Matrix& m) {
  if (!m.is_square()) throw DomainError("char_poly needs a square matrix");
  const auto& R = m.ring();
  const std::size_t n = m.rows();

  // v holds the characteristic polynomial of the leading r x r block,
  // coefficients by descending degree. Each step multiplies by the lower
  // triangular Toeplitz matrix whose first column is
  // 1, -a, -R*C, -R*M*C, ..., -R*M^(r-1)*C.
  std::vector<Integer> v{1};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Integer> col(r + 2);
    col[0] = 1;
    col[1] = R.neg(m.raw(r, r));
    std::vector<Integer> w(r);
    for (std::size_t i = 0; i < r; ++i) w[i] = m.raw(i, r);
    for (std::size_t k = 2; k < r + 2; ++k) {
      Integer dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += m.raw(r, i) * w[i];
      col[k] = R.neg(R.reduce(std::move(dot)));
      if (k + 1 < r + 2) {
        std::vector<Integer> next(r);
        for (std::size_t i = 0; i < r; ++i) {
          Integer acc = 0;
          for (std::size_t j = 0; j < r; ++j) acc += m.raw(i, j) * w[j];
          next[i] = R.reduce(std::move(acc));
        }
        w = std::move(next);
      }
    }
    std::vector<Integer> nv(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j <= std::min(i, r); ++j) acc += col[i - j] * v[j];
      nv[i] = R.reduce(std::move(acc));
    }
    v = std::move(nv);
  }
  std::reverse(v.begin(), v.end());
  return Poly(R, std::move(v));
}

Matrix poly_eval(const Poly& p, const Matrix& m) {
  require_same_ring(p.ring(), m.ring(), "poly_eval");
  if (!m.is_square()) throw DomainError("poly_eval needs a square matrix");
  const auto& R = m.ring();
  Matrix acc(R, m.rows(), m.cols());
  for (long i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    const Integer& c = p.raw(static_cast<std::size_t>(i));
    for (std::size_t d = 0; d < m.rows(); ++d) acc.raw(d, d) = R.add(acc.raw(d, d), c);
  }
  return acc;
}

std::string to_string(const Matrix& m) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, m.raw(i, j).get_str().size());
  }
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string e = m.raw(i, j).get_str();
      if (j) s += ' ';
      s.append(width - e.size(), ' ');
      s += e;
    }
    s += '\n';
  }
  return s;
}

}  // namespace linrec
