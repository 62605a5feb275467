#pragma once

// Constructive idempotent splitting on matrix-algebra models: factor an
// idempotent endomorphism b of M_n as b = u o v with v o u = id (reduced
// column-echelon image basis), transport the Frobenius structure onto the
// image via
//
//   m_Y = v o m o (u (x) u)     e_Y   = v o e
//   delta_Y = (v (x) v) o delta o u   eps_Y = eps o u
//
// and verify that u embeds the result as a Frobenius subalgebra (algebra
// morphism, unital morphism, u* = v and v* = u for the adjoints induced by
// ev = eps o m and coev = delta o e on each side).  The reverse direction
// turns a unital span with nondegenerate restricted trace form into the
// selfdual unital exchange-relation idempotent b = i o i*.

#include <stdexcept>
#include <string>
#include <vector>

#include "endo.hpp"
#include "frobalg.hpp"
#include "linalg.hpp"

namespace frobkit {

/// A splitting b = u.v with v.u = id: u's columns are the reduced
/// column-echelon basis of the image of b's coefficient matrix (leftmost
/// pivot rows first, pivot entries normalized to 1), and v reads off the
/// coordinates of b(x) in that basis.
struct SplitData {
  Endo b;
  int rank = 0;
  RatMat u;  // d x rank, d = n^2
  RatMat v;  // rank x d
};

/// The Frobenius structure transported onto the image.  `issues` is empty
/// when the data passed full validation; the lenient constructor below
/// records violations here instead of throwing, so that the embedding
/// checks can still be run on inputs missing some hypotheses.
struct InducedAlgebra {
  FrobAlgebra Y;
  std::vector<FrobCheckIssue> issues;
  bool valid() const { return issues.empty(); }
};

struct EmbeddingCheck {
  std::string name;  // "algebra-morphism", "unital-morphism", "u*-equals-v", "v*-equals-u"
  bool holds = false;
  std::string detail;  // witness location on failure
};

struct EmbeddingReport {
  std::vector<EmbeddingCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.holds) return false;
    return true;
  }
};

/// A span handed to subalgebra_to_idempotent that is not a Frobenius
/// subalgebra.  `kind` is a stable slug: "invalid-span" (shape or linear
/// dependence), "not-closed", "unit-missing", "degenerate-form", or
/// "verification-failed".
class SubalgebraRejection : public std::runtime_error {
 public:
  SubalgebraRejection(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

/// Exact rank factorization of an idempotent.  Splitting needs only
/// idempotency; selfduality, unitality and the exchange relations are
/// examined downstream.  Throws std::invalid_argument with a coefficient
/// witness when b is not idempotent.
SplitData split_idempotent(const Endo& b);

/// Transports the ambient structure onto the image and validates every
/// Frobenius axiom.  Throws FrobValidationError naming the first failed
/// axiom (with witness indices) when b did not satisfy the hypotheses that
/// make the image a Frobenius algebra.
InducedAlgebra induce_structure(const SplitData& split);

/// Same transport, but validation failures are recorded in `issues`
/// instead of thrown, so the embedding checks can be run on the result.
InducedAlgebra induce_structure_lenient(const SplitData& split);

/// Checks that u realizes the induced algebra as a Frobenius subalgebra:
/// u o m_Y = m o (u (x) u), u o e_Y = e, and u* = v, v* = u where the
/// adjoints are computed with coev_Y = delta_Y o e_Y, ev_Y = eps_Y o m_Y
/// and the ambient ev = eps o m, coev = delta o e.  Failures are report
/// entries, never exceptions.
EmbeddingReport verify_embedding(const SplitData& split, const InducedAlgebra& induced);

/// Forward construction: given a basis of a unital subalgebra of M_n
/// (columns of `span_columns`, each an n^2-vector over the matrix units in
/// row-major order), computes b = i o i* where i* has coordinates
/// G_Y^{-1} . (trace pairing with the basis).  The result is verified to be
/// a selfdual unital idempotent satisfying the exchange relations.
Endo subalgebra_to_idempotent(const RatMat& span_columns, int n);

}  // namespace frobkit
