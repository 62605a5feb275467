#pragma once

// Groebner bases over Rat: Buchberger's algorithm with the coprime and
// chain criteria, full interreduction to the unique reduced basis, normal
// forms (hence ideal membership), Krull dimension of the quotient, and the
// quotient's vector-space dimension when it is finite.
//
// Long runs can be bounded: exceeding the wall-clock or S-pair budget
// raises ResourceLimitError, a distinct outcome that is never conflated
// with a mathematical answer.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"

namespace frobkit {

struct Ideal {
  RingPtr ring;
  std::vector<MPoly> gens;
};

Ideal make_ideal(RingPtr ring, std::vector<MPoly> gens);

struct GroebnerBasis {
  Ideal ideal;
  std::vector<MPoly> basis;  // monic, sorted ascending by leading monomial
  bool reduced = false;
};

/// Thrown when a computation exceeds its budget.  `what()` names the limit.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GBOptions {
  /// Wall-clock budget in seconds; 0 disables the check.
  double budget_seconds = 0;
  /// Maximum number of S-pairs reduced; 0 disables the check.
  std::uint64_t pair_budget = 0;
};

/// Remainder of p under multivariate division by `basis` (every term of the
/// result is divisible by no leading monomial of the basis).  For a Groebner
/// basis this is the canonical normal form: zero iff p lies in the ideal.
MPoly normal_form(const MPoly& p, const std::vector<MPoly>& basis);
MPoly normal_form(const MPoly& p, const GroebnerBasis& gb);

/// Reduced Groebner basis of the ideal in its ring's monomial order.
/// Deterministic, and independent of the order in which generators are
/// listed (the reduced basis is unique).  Throws ResourceLimitError if a
/// budget is exceeded.
GroebnerBasis groebner(const Ideal& ideal, const GBOptions& opts = {});

/// Krull dimension of ring/ideal, from the reduced basis: the largest
/// number of variables no leading monomial lives entirely within.  The unit
/// ideal gives -1; the zero ideal gives the full variable count.
int ideal_dimension(const GroebnerBasis& gb);

/// Number of standard monomials (monomials divisible by no leading
/// monomial), i.e. the dimension of ring/ideal as a vector space; nullopt
/// when that dimension is infinite.
std::optional<std::uint64_t> vector_space_dimension(const GroebnerBasis& gb);

}  // namespace frobkit
