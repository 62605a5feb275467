#pragma once

// Dense exact linear algebra over Rat, sized for the small matrices this
// project manipulates (dimensions up to a few hundred).

#include <optional>
#include <vector>

#include "rat.hpp"

namespace frobkit {

struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;  // row-major

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}

  Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static RatMat identity(int n);
  bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool is_zero() const;
};

RatMat mat_mul(const RatMat& a, const RatMat& b);
RatMat mat_add(const RatMat& a, const RatMat& b);
RatMat mat_sub(const RatMat& a, const RatMat& b);
RatMat mat_scale(const RatMat& a, const Rat& c);
RatMat mat_transpose(const RatMat& a);
/// Kronecker product; the left factor's indices are the most significant.
RatMat mat_kron(const RatMat& a, const RatMat& b);

/// Reduced row echelon form, eliminating with the leftmost available pivot
/// column first.  Returns the pivot column indices in increasing order.
std::vector<int> rref_in_place(RatMat& m);

/// Inverse, or nullopt for a singular matrix.
std::optional<RatMat> mat_inverse(const RatMat& m);

/// Solves a·x = rhs exactly for each rhs column; nullopt when some column
/// lies outside the column space (a need not be square).
std::optional<RatMat> mat_solve(const RatMat& a, const RatMat& rhs);

}  // namespace frobkit
