#pragma once

// Dense exact tensor maps: linear maps (Q^d)^(x p) -> (Q^d)^(x q) stored as
// d^q x d^p matrices, with multi-indices packed most-significant-first (the
// first tensor factor varies slowest).  On top of them sits the concrete
// Frobenius structure of a matrix algebra: multiplication m, unit e,
// comultiplication delta, counit eps = trace, and the derived evaluation
// ev = eps o m and coevaluation coev = delta o e.

#include <cstdint>
#include <stdexcept>

#include "endo.hpp"
#include "linalg.hpp"

namespace frobkit {

std::size_t pow_size(int base, int exp);

struct TensorMap {
  int d = 0;  // dimension of the underlying space
  int p = 0;  // tensor arity of the domain
  int q = 0;  // tensor arity of the codomain
  RatMat mat; // d^q rows, d^p columns

  TensorMap() = default;
  TensorMap(int d_, int p_, int q_)
      : d(d_), p(p_), q(q_),
        mat(static_cast<int>(pow_size(d_, q_)), static_cast<int>(pow_size(d_, p_))) {}

  bool operator==(const TensorMap& o) const {
    return d == o.d && p == o.p && q == o.q && mat == o.mat;
  }
};

TensorMap tm_identity(int d, int arity = 1);
/// f after g (g feeds into f).
TensorMap tm_compose(const TensorMap& f, const TensorMap& g);
/// Side-by-side tensor product, f on the first factors.
TensorMap tm_kron(const TensorMap& f, const TensorMap& g);

/// The Frobenius structure carried by a d-dimensional algebra, as explicit
/// tensors.  ev and coev are derived, not stored.
struct FrobModel {
  int d = 0;
  TensorMap m;      // (2,1) multiplication
  TensorMap e;      // (0,1) unit
  TensorMap delta;  // (1,2) comultiplication
  TensorMap eps;    // (1,0) counit

  TensorMap ev() const { return tm_compose(eps, m); }
  TensorMap coev() const { return tm_compose(delta, e); }
};

/// The matrix algebra M_n with counit the (unnormalized) trace and the
/// comultiplication E_{a,b} |-> sum_q E_{a,q} (x) E_{q,b}.
FrobModel matrix_model(int n);

/// An endomorphism as a (1,1) tensor map on the n^2-dimensional algebra.
TensorMap endo_tensor(const Endo& t);
/// Inverse of endo_tensor; requires p = q = 1 and d a perfect square.
Endo tensor_endo(const TensorMap& f);

}  // namespace frobkit
