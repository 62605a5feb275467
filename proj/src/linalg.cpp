#include "linalg.hpp"

#include <stdexcept>

namespace frobkit {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMat::is_zero() const {
  for (const Rat& x : a)
    if (!rat_is_zero(x)) return false;
  return true;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch in product");
  RatMat r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Rat& aik = a.at(i, k);
      if (rat_is_zero(aik)) continue;
      for (int j = 0; j < b.cols; ++j) {
        const Rat& bkj = b.at(k, j);
        if (!rat_is_zero(bkj)) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

RatMat mat_add(const RatMat& a, const RatMat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("matrix shape mismatch in sum");
  RatMat r = a;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += b.a[i];
  return r;
}

RatMat mat_sub(const RatMat& a, const RatMat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("matrix shape mismatch in difference");
  RatMat r = a;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= b.a[i];
  return r;
}

RatMat mat_scale(const RatMat& a, const Rat& c) {
  RatMat r = a;
  for (Rat& x : r.a) x *= c;
  return r;
}

RatMat mat_transpose(const RatMat& a) {
  RatMat r(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
  return r;
}

RatMat mat_kron(const RatMat& a, const RatMat& b) {
  RatMat r(a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      const Rat& aij = a.at(i, j);
      if (rat_is_zero(aij)) continue;
      for (int k = 0; k < b.rows; ++k)
        for (int l = 0; l < b.cols; ++l)
          r.at(i * b.rows + k, j * b.cols + l) = aij * b.at(k, l);
    }
  return r;
}

std::vector<int> rref_in_place(RatMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int r = row; r < m.rows; ++r)
      if (!rat_is_zero(m.at(r, col))) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
    Rat inv = 1 / m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      Rat f = m.at(r, col);
      if (rat_is_zero(f)) continue;
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::optional<RatMat> mat_inverse(const RatMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of a non-square matrix");
  RatMat aug(m.rows, 2 * m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = 1;
  }
  std::vector<int> pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) != m.rows) return std::nullopt;
  for (int k = 0; k < m.rows; ++k)
    if (pivots[k] != k) return std::nullopt;
  RatMat inv(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

std::optional<RatMat> mat_solve(const RatMat& a, const RatMat& rhs) {
  if (a.rows != rhs.rows) throw std::invalid_argument("solve shape mismatch");
  RatMat aug(a.rows, a.cols + rhs.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < rhs.cols; ++j) aug.at(i, a.cols + j) = rhs.at(i, j);
  }
  std::vector<int> pivots = rref_in_place(aug);
  // inconsistent if any pivot falls in the rhs block
  for (int p : pivots)
    if (p >= a.cols) return std::nullopt;
  RatMat x(a.cols, rhs.cols);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (int j = 0; j < rhs.cols; ++j) x.at(pivots[k], j) = aug.at(k, a.cols + j);
  return x;
}

}  // namespace frobkit
