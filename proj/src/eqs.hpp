#pragma once

// Polynomial equation systems for endomorphisms of M_n, written in the
// coefficient variables A_i_j_k_l (1-based indices) plus one extra variable
// x for the convolution-stability scalar.  Each list expresses one of the
// five coefficient conditions:
//
//   eqs1  selfdual             A_{i,j,k,l} = A_{l,k,j,i}
//   eqs2  unital               sum_i A_{i,i,k,l} = delta_{k,l}
//   eqs3  idempotent           sum_{r,s} A_{i,j,r,s} A_{r,s,k,l} = A_{i,j,k,l}
//   eqs4  convolution-stable   sum_{r,s} A_{i,r,k,s} A_{r,j,s,l} = x A_{i,j,k,l}
//   eqs5  exchange relations   the two differences of the three sums
//                              t1 = sum_t A_{i,j,t,k} A_{t,l,r,s}
//                              t2 = sum_t A_{i,j,r,t} A_{k,l,t,s}
//                              t3 = sum_t A_{k,l,j,t} A_{i,t,r,s}
//
// Counts: |eqs1| = n^4 (trivially-zero entries included), |eqs2| = n^2,
// |eqs3| = |eqs4| = n^4, |eqs5| = 2 n^6.

#include <vector>

#include "groebner.hpp"
#include "poly.hpp"

namespace frobkit {

struct EquationSet {
  int n = 0;
  RingPtr ring;  // A_1_1_1_1 ... A_n_n_n_n, x  (x last)
  std::vector<MPoly> eqs1, eqs2, eqs3, eqs4, eqs5;

  /// Ring index of A_i_j_k_l (arguments 1-based).
  int var_index(int i, int j, int k, int l) const;
  /// Ring index of x.
  int x_index() const { return n * n * n * n; }
};

EquationSet make_eqs(int n, MonomialOrder order = MonomialOrder::kDegrevlex);

/// Point of the equation ring built from coefficient values listed in
/// A_1_1_1_1..A_n_n_n_n order, with `x_value` in the final slot.
std::vector<Rat> equation_point(const std::vector<Rat>& coeffs, const Rat& x_value);

}  // namespace frobkit
