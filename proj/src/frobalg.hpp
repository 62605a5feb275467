#pragma once

// Finite-dimensional Frobenius algebras presented by structure constants: a
// basis e_1..e_d with products e_i e_j = sum_k c[i][j][k] e_k, a unit vector
// and a counit functional.  Nondegeneracy of the bilinear form
// kappa(a,b) = eps(ab) yields dual bases e_i' with kappa(e_i, e_j') =
// delta_{ij} and the comultiplication Delta(a) = sum_i (a e_i) (x) e_i',
// making the data a Frobenius algebra in the diagrammatic sense.
//
// Endomorphisms of such an algebra are plain d x d matrices over the chosen
// basis; the predicate suite mirrors the one for matrix-unit coefficients,
// with exchange relations checked on basis pairs (sufficient by
// bilinearity).

#include <string>
#include <vector>

#include "endo.hpp"
#include "linalg.hpp"
#include "tensor.hpp"

namespace frobkit {

struct FrobCheckIssue {
  std::string axiom;    // e.g. "associativity", "gram", "coassociativity"
  std::string message;  // human-readable, 1-based indices
};

class FrobValidationError : public std::runtime_error {
 public:
  FrobValidationError(std::string what, std::vector<FrobCheckIssue> issues)
      : std::runtime_error(std::move(what)), issues_(std::move(issues)) {}
  const std::vector<FrobCheckIssue>& issues() const { return issues_; }

 private:
  std::vector<FrobCheckIssue> issues_;
};

struct FrobAlgebra {
  int d = 0;
  // c[i][j][k]: coefficient of e_k in e_i e_j, flattened ((i*d)+j)*d+k.
  std::vector<Rat> c;
  std::vector<Rat> unit;    // coordinates of 1
  std::vector<Rat> counit;  // eps(e_i)
  // Derived data (filled by the factories below).
  RatMat gram;              // G[i][j] = eps(e_i e_j)
  RatMat gram_inv;
  RatMat dualbasis;         // column j = coordinates of e_j'
  std::vector<Rat> comul;   // coefficient of e_p (x) e_q in Delta(e_i),
                            // flattened ((i*d)+p)*d+q

  const Rat& cc(int i, int j, int k) const {
    return c[(static_cast<std::size_t>(i) * d + j) * d + k];
  }
  const Rat& dl(int i, int p, int q) const {
    return comul[(static_cast<std::size_t>(i) * d + p) * d + q];
  }

  /// Product of two coordinate vectors.
  std::vector<Rat> mul(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
  /// eps applied to a coordinate vector.
  Rat eps(const std::vector<Rat>& x) const;
};

/// Builds and fully validates a Frobenius algebra; the comultiplication is
/// derived from the dual bases.  Throws FrobValidationError when an axiom
/// fails or the bilinear form is singular (the message then contains
/// "degenerate with respect to the bilinear form").
FrobAlgebra make_general_frobenius(int d, std::vector<Rat> c,
                                   std::vector<Rat> unit,
                                   std::vector<Rat> counit);

/// Same, but with the comultiplication supplied by the caller (it is checked
/// against the axioms rather than derived).
FrobAlgebra make_frobenius_with_comul(int d, std::vector<Rat> c,
                                      std::vector<Rat> unit,
                                      std::vector<Rat> counit,
                                      std::vector<Rat> comul);

/// All axiom violations of the (fully populated) structure, empty when the
/// data is a genuine Frobenius algebra.  Checks associativity, two-sided
/// unitality, counit laws, coassociativity, the Frobenius condition, and
/// that the stored comultiplication matches the dual-basis one.
std::vector<FrobCheckIssue> validate_structure(const FrobAlgebra& alg);

/// The unital subalgebra of M_2 generated by a non-scalar matrix X, as an
/// abstract Frobenius algebra on the basis {I, X} with counit the trace;
/// products close by the Cayley-Hamilton identity X^2 = tr(X) X - det(X) I.
/// Rejects scalar X (the span is one-dimensional) and X with
/// tr(X)^2 - 4 det(X) = 0 (trace form degenerate on the span).
FrobAlgebra cayley_hamilton_subalgebra(const RatMat& x);

/// The structure tensors of the algebra, for diagram evaluation.
FrobModel model_from(const FrobAlgebra& alg);

// --- Endomorphisms of a general Frobenius algebra (d x d matrices) ---------

/// Adjoint with respect to kappa: M* = G^{-1} M^T G.
RatMat alg_dual(const FrobAlgebra& alg, const RatMat& m);
/// Convolution m o (f (x) g) o Delta.
RatMat alg_convolve(const FrobAlgebra& alg, const RatMat& f, const RatMat& g);
/// Predicate checks in basis form; conv_stable solves for the scalar from
/// the first nonzero entry unless a hint pins it, exchange relations are
/// checked on basis pairs.
PredicateReport<Rat> alg_check_predicate(const FrobAlgebra& alg, const RatMat& m,
                                         Predicate which,
                                         const std::optional<Rat>& lambda_hint = {});

}  // namespace frobkit
