#pragma once

// Multivariate polynomials over Rat with named variables and a fixed
// monomial order (degrevlex or lex).  Polynomials are kept in canonical
// form at all times: terms strictly descending in the ring's order, no zero
// coefficients.  Values are immutable in spirit — every operation returns a
// fresh polynomial — so they are safe to share across threads.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rat.hpp"

namespace frobkit {

enum class MonomialOrder { kDegrevlex, kLex };

/// A polynomial ring: variable names plus the monomial order.  Shared
/// immutably by every polynomial built over it; two polynomials are
/// compatible when their ring pointers compare equal or the contents match.
struct Ring {
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::kDegrevlex;

  int nvars() const { return static_cast<int>(vars.size()); }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::kDegrevlex);

/// True when the two rings may be mixed in one operation.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector with cached total degree.
struct Monomial {
  std::vector<int> e;
  int deg = 0;

  static Monomial one(int nvars) { return Monomial{std::vector<int>(nvars, 0), 0}; }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_equal(const Monomial& a, const Monomial& b);
bool mono_is_one(const Monomial& a);

/// Three-way comparison in the given order: negative, zero, or positive as
/// a <, =, > b.  Degrevlex: higher total degree first; ties broken by the
/// *smallest* trailing exponent difference (the classic reverse tie-break).
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order);

struct Term {
  Monomial m;
  Rat c;
};

class MPoly {
 public:
  MPoly() = default;

  static MPoly zero(RingPtr ring);
  static MPoly constant(RingPtr ring, Rat c);
  /// The single variable vars[idx] raised to `power`.
  static MPoly var(RingPtr ring, int idx, int power = 1);
  /// From an arbitrary term list (any order, duplicates allowed); the
  /// result is canonicalized.
  static MPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().m.deg == 0; }
  /// Leading term in the ring's order; requires a nonzero polynomial.
  const Term& leading() const;
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.deg; }

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly scaled(const Rat& c) const;
  /// this · x^m.  Multiplying by one monomial preserves term order, so this
  /// is a plain exponent shift.
  MPoly mul_mono(const Monomial& m) const;
  /// All terms but the leading one.
  MPoly tail() const;
  /// this − t·g, the workhorse of polynomial reduction.
  MPoly sub_mul_term(const Term& t, const MPoly& g) const;
  /// Same polynomial with leading coefficient 1 (zero stays zero).
  MPoly monic() const;

  /// Exact evaluation at a full point (one Rat per ring variable).
  Rat eval(const std::vector<Rat>& point) const;

  /// Human-readable form, e.g. "x^3 - 7/2*x^2 + 7/2*x - 1".
  std::string str() const;

 private:
  MPoly(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;  // strictly descending in ring order
};

/// Convenience arithmetic with constants.
MPoly operator*(const Rat& c, const MPoly& p);
MPoly operator+(const MPoly& p, const Rat& c);
MPoly operator-(const MPoly& p, const Rat& c);

}  // namespace frobkit
