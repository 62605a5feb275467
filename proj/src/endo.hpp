#pragma once

// Endomorphisms of the matrix algebra M_n, stored by structure
// coefficients: A[i][j][k][l] is the coefficient of E_{k,l} in T(E_{i,j}).
// The calculus implemented here — dual, convolution, composition, Fourier
// transform and its one-sided inverse, centrality, and the predicate suite
// (selfdual / unital / idempotent / convolution-stable / exchange
// relations / normal / biprojection) — is written once over a generic
// scalar, so the same code runs over exact rationals and over polynomial
// coefficients (for families with free parameters).
//
// Index conventions: everything in memory and in files is 0-based; indices
// quoted in reports and error messages are 1-based, matching the usual
// E_{1,1}..E_{n,n} notation for matrix units.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"
#include "rat.hpp"

namespace frobkit {

// Uniform scalar interface for Rat and MPoly coefficients.  "like" an
// exemplar because a polynomial zero must carry its ring.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
  static Rat zero_like(const Rat&) { return Rat(0); }
  static Rat one_like(const Rat&) { return Rat(1); }
  static bool is_zero(const Rat& x) { return rat_is_zero(x); }
  static std::string str(const Rat& x) { return rat_str(x); }
};

template <>
struct ScalarOps<MPoly> {
  static MPoly zero_like(const MPoly& x) { return MPoly::zero(x.ring()); }
  static MPoly one_like(const MPoly& x) { return MPoly::constant(x.ring(), Rat(1)); }
  static bool is_zero(const MPoly& x) { return x.is_zero(); }
  static std::string str(const MPoly& x) { return x.str(); }
};

template <class S>
struct EndoT {
  int n = 0;
  std::vector<S> a;  // n^4 entries, index (((i*n)+j)*n+k)*n+l

  const S& at(int i, int j, int k, int l) const {
    return a[static_cast<std::size_t>(((i * n + j) * n + k)) * n + l];
  }
  S& at(int i, int j, int k, int l) {
    return a[static_cast<std::size_t>(((i * n + j) * n + k)) * n + l];
  }
  const S& exemplar() const { return a.front(); }

  bool operator==(const EndoT& o) const { return n == o.n && a == o.a; }
};

using Endo = EndoT<Rat>;
using PolyEndo = EndoT<MPoly>;

/// A linear map on the two-fold tensor square: the coefficient of
/// E_{p,q} (x) E_{r,s} in the image of E_{a,b} (x) E_{c,d}.
template <class S>
struct TensorSquareT {
  int n = 0;
  std::vector<S> g;  // n^8 entries

  const S& at(int a_, int b, int c, int d, int p, int q, int r, int s) const {
    std::size_t idx = a_;
    for (int v : {b, c, d, p, q, r, s}) idx = idx * n + v;
    return g[idx];
  }
  S& at(int a_, int b, int c, int d, int p, int q, int r, int s) {
    std::size_t idx = a_;
    for (int v : {b, c, d, p, q, r, s}) idx = idx * n + v;
    return g[idx];
  }

  bool operator==(const TensorSquareT& o) const { return n == o.n && g == o.g; }
};

using TensorSquare = TensorSquareT<Rat>;

namespace detail {

template <class S>
EndoT<S> endo_like(const EndoT<S>& t) {
  EndoT<S> r;
  r.n = t.n;
  r.a.assign(t.a.size(), ScalarOps<S>::zero_like(t.exemplar()));
  return r;
}

inline void require_same(int n1, int n2) {
  if (n1 != n2) throw std::invalid_argument("endomorphisms live on different algebras");
}

}  // namespace detail

// --- Basic maps over Rat ---------------------------------------------------

Endo identity_endo(int n);
/// X |-> its diagonal part.
Endo diagonal_endo(int n);
/// X |-> (1/n) Tr(X) I.
Endo trace_endo(int n);
Endo zero_endo(int n);

/// The d x d matrix of T acting on the basis E_{1,1},...,E_{n,n} listed
/// row-major (d = n^2): column (i,j), row (k,l).
RatMat matrix_of(const Endo& t);
Endo endo_from_matrix(int n, const RatMat& m);

/// T applied to an n x n matrix.
RatMat apply(const Endo& t, const RatMat& x);

// --- The calculus, generic over the scalar ---------------------------------

/// Adjoint with respect to the trace pairing: coefficientwise,
/// dual(T)[i][j][k][l] = T[l][k][j][i].
template <class S>
EndoT<S> dual(const EndoT<S>& t) {
  EndoT<S> r = detail::endo_like(t);
  const int n = t.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) r.at(i, j, k, l) = t.at(l, k, j, i);
  return r;
}

/// Convolution product (S * T)(X) = sum_{i,j} S(X E_{i,j}) T(E_{j,i}):
/// coefficientwise sum_{r,s} S[i][r][k][s] T[r][j][s][l].
template <class S>
EndoT<S> convolve(const EndoT<S>& s, const EndoT<S>& t) {
  detail::require_same(s.n, t.n);
  EndoT<S> out = detail::endo_like(s);
  const int n = s.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          S acc = ScalarOps<S>::zero_like(s.exemplar());
          for (int r = 0; r < n; ++r)
            for (int q = 0; q < n; ++q)
              acc = acc + s.at(i, r, k, q) * t.at(r, j, q, l);
          out.at(i, j, k, l) = std::move(acc);
        }
  return out;
}

/// Ordinary composition s after t.
template <class S>
EndoT<S> compose(const EndoT<S>& s, const EndoT<S>& t) {
  detail::require_same(s.n, t.n);
  EndoT<S> out = detail::endo_like(s);
  const int n = s.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          S acc = ScalarOps<S>::zero_like(s.exemplar());
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
              acc = acc + t.at(i, j, k, l) * s.at(k, l, p, q);
          out.at(i, j, p, q) = std::move(acc);
        }
  return out;
}

template <class S>
EndoT<S> endo_sub(const EndoT<S>& a, const EndoT<S>& b) {
  detail::require_same(a.n, b.n);
  EndoT<S> out = a;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = out.a[i] - b.a[i];
  return out;
}

template <class S, class C>
EndoT<S> endo_scale(const EndoT<S>& a, const C& c) {
  EndoT<S> out = a;
  for (S& x : out.a) x = x * c;
  return out;
}

/// Fourier transform: T on X becomes a map on X (x) X via
/// (id (x) m) o (id (x) T (x) id) o (delta (x) id).  In coefficients the
/// image of E_{a,b} (x) E_{c,d} is sum_{q,k} T[q][b][k][c] E_{a,q} (x) E_{k,d}.
template <class S>
TensorSquareT<S> fourier(const EndoT<S>& t) {
  const int n = t.n;
  TensorSquareT<S> out;
  out.n = n;
  std::size_t total = 1;
  for (int v = 0; v < 8; ++v) total *= n;
  out.g.assign(total, ScalarOps<S>::zero_like(t.exemplar()));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int q = 0; q < n; ++q)
            for (int k = 0; k < n; ++k)
              out.at(a, b, c, d, a, q, k, d) = t.at(q, b, k, c);
  return out;
}

/// One-sided inverse of the Fourier transform:
/// (eps (x) id) o x o (id (x) e); coefficientwise
/// T[a][b][r][s] = sum_{c,p} x[a][b][c][c][p][p][r][s].
template <class S>
EndoT<S> fourier_inv(const TensorSquareT<S>& x) {
  EndoT<S> out;
  out.n = x.n;
  const int n = x.n;
  out.a.assign(static_cast<std::size_t>(n) * n * n * n,
               ScalarOps<S>::zero_like(x.g.front()));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          S acc = ScalarOps<S>::zero_like(x.g.front());
          for (int c = 0; c < n; ++c)
            for (int p = 0; p < n; ++p)
              acc = acc + x.at(a, b, c, c, p, p, r, s);
          out.at(a, b, r, s) = std::move(acc);
        }
  return out;
}

// --- Predicates ------------------------------------------------------------

/// Locates a failing index (1-based) together with the two values that
/// should have agreed.
struct Witness {
  std::string kind;          // e.g. "coefficient", "basis-pair"
  std::vector<int> indices;  // 1-based
  std::string detail;
};

enum class Predicate {
  kSelfdual,
  kUnital,
  kIdempotent,
  kConvStable,
  kEr,
  kNormal,
  kBiprojection,
};

/// Canonical (underscore) name, e.g. "conv_stable".
std::string predicate_name(Predicate p);
/// Accepts underscore and hyphen spellings; nullopt for unknown names.
std::optional<Predicate> predicate_from_name(const std::string& name);

template <class S>
struct PredicateReport {
  Predicate predicate;
  bool holds = false;
  std::optional<S> lambda;            // set by conv_stable (and biprojection)
  std::optional<Witness> witness;     // set on failure
  std::string note;                   // extra context, e.g. why lambda failed
  std::vector<PredicateReport<S>> parts;  // sub-reports of compound predicates
};

template <class S>
bool is_central(const EndoT<S>& t, Witness* w = nullptr) {
  const int n = t.n;
  const S c = t.at(0, 0, 0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          S want = (i == k && j == l) ? c : ScalarOps<S>::zero_like(c);
          if (!ScalarOps<S>::is_zero(t.at(i, j, k, l) - want)) {
            if (w)
              *w = Witness{"coefficient",
                           {i + 1, j + 1, k + 1, l + 1},
                           "entry " + ScalarOps<S>::str(t.at(i, j, k, l)) +
                               " breaks scalar-multiple-of-identity form"};
            return false;
          }
        }
  return true;
}

template <class S>
bool is_central(const TensorSquareT<S>& t, Witness* w = nullptr) {
  const int n = t.n;
  const S c = t.at(0, 0, 0, 0, 0, 0, 0, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        for (int d = 0; d < n; ++d)
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                  bool diag = a == p && b == q && cc == r && d == s;
                  S want = diag ? c : ScalarOps<S>::zero_like(c);
                  if (!ScalarOps<S>::is_zero(t.at(a, b, cc, d, p, q, r, s) - want)) {
                    if (w)
                      *w = Witness{"coefficient",
                                   {a + 1, b + 1, cc + 1, d + 1, p + 1, q + 1,
                                    r + 1, s + 1},
                                   "tensor-square map is not a scalar multiple "
                                   "of the identity"};
                    return false;
                  }
                }
  return true;
}

/// The two difference tensors of the exchange relations, indexed by
/// (i,j,k,l,r,s): first = t1 - t2, second = t2 - t3 with
///   t1 = sum_t A[i][j][t][k] A[t][l][r][s]
///   t2 = sum_t A[i][j][r][t] A[k][l][t][s]
///   t3 = sum_t A[k][l][j][t] A[i][t][r][s].
/// Both vanish identically iff T(T(a)b) = T(a)T(b) = T(aT(b)) for all a, b.
template <class S>
std::pair<std::vector<S>, std::vector<S>> er_residuals(const EndoT<S>& t) {
  const int n = t.n;
  std::size_t total = 1;
  for (int v = 0; v < 6; ++v) total *= n;
  std::vector<S> first(total, ScalarOps<S>::zero_like(t.exemplar()));
  std::vector<S> second = first;
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s, ++idx) {
              S t1 = ScalarOps<S>::zero_like(t.exemplar());
              S t2 = t1, t3 = t1;
              for (int w = 0; w < n; ++w) {
                t1 = t1 + t.at(i, j, w, k) * t.at(w, l, r, s);
                t2 = t2 + t.at(i, j, r, w) * t.at(k, l, w, s);
                t3 = t3 + t.at(k, l, j, w) * t.at(i, w, r, s);
              }
              first[idx] = t1 - t2;
              second[idx] = t2 - t3;
            }
  return {std::move(first), std::move(second)};
}

namespace detail {

template <class S>
PredicateReport<S> check_selfdual(const EndoT<S>& t) {
  PredicateReport<S> rep{Predicate::kSelfdual, true, {}, {}, "", {}};
  const int n = t.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (!ScalarOps<S>::is_zero(t.at(i, j, k, l) - t.at(l, k, j, i))) {
            rep.holds = false;
            rep.witness = Witness{
                "coefficient",
                {i + 1, j + 1, k + 1, l + 1},
                "A[i,j,k,l] = " + ScalarOps<S>::str(t.at(i, j, k, l)) +
                    " but A[l,k,j,i] = " + ScalarOps<S>::str(t.at(l, k, j, i))};
            return rep;
          }
  return rep;
}

template <class S>
PredicateReport<S> check_unital(const EndoT<S>& t) {
  PredicateReport<S> rep{Predicate::kUnital, true, {}, {}, "", {}};
  const int n = t.n;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      S acc = ScalarOps<S>::zero_like(t.exemplar());
      for (int i = 0; i < n; ++i) acc = acc + t.at(i, i, k, l);
      if (k == l) acc = acc - ScalarOps<S>::one_like(t.exemplar());
      if (!ScalarOps<S>::is_zero(acc)) {
        rep.holds = false;
        rep.witness =
            Witness{"coefficient",
                    {k + 1, l + 1},
                    "T(identity) has wrong E_{k,l} coefficient (off by " +
                        ScalarOps<S>::str(acc) + ")"};
        return rep;
      }
    }
  return rep;
}

template <class S>
PredicateReport<S> check_idempotent(const EndoT<S>& t) {
  PredicateReport<S> rep{Predicate::kIdempotent, true, {}, {}, "", {}};
  EndoT<S> diff = endo_sub(compose(t, t), t);
  const int n = t.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (!ScalarOps<S>::is_zero(diff.at(i, j, k, l))) {
            rep.holds = false;
            rep.witness = Witness{"coefficient",
                                  {i + 1, j + 1, k + 1, l + 1},
                                  "T^2 - T has coefficient " +
                                      ScalarOps<S>::str(diff.at(i, j, k, l))};
            return rep;
          }
  return rep;
}

template <class S>
PredicateReport<S> check_conv_stable(const EndoT<S>& t,
                                     const std::optional<S>& lambda_hint);

template <>
inline PredicateReport<Rat> check_conv_stable<Rat>(
    const EndoT<Rat>& t, const std::optional<Rat>& lambda_hint) {
  PredicateReport<Rat> rep{Predicate::kConvStable, false, {}, {}, "", {}};
  const int n = t.n;
  Endo tt = convolve(t, t);
  Rat lambda;
  if (lambda_hint) {
    lambda = *lambda_hint;
  } else {
    // Solve for lambda from the first nonzero coefficient of T (fixed
    // index order), then verify globally.
    int found = -1;
    for (std::size_t idx = 0; idx < t.a.size(); ++idx)
      if (!rat_is_zero(t.a[idx])) {
        found = static_cast<int>(idx);
        break;
      }
    if (found < 0) {
      rep.note = "the zero map is not convolution-stable (lambda must be nonzero)";
      return rep;
    }
    lambda = tt.a[found] / t.a[found];
  }
  if (rat_is_zero(lambda)) {
    rep.note = "T*T = lambda T would force lambda = 0, but lambda must be nonzero";
    return rep;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rat diff = tt.at(i, j, k, l) - lambda * t.at(i, j, k, l);
          if (!rat_is_zero(diff)) {
            rep.witness = Witness{
                "coefficient",
                {i + 1, j + 1, k + 1, l + 1},
                "(T*T)[i,j,k,l] = " + rat_str(tt.at(i, j, k, l)) +
                    " != lambda*T[i,j,k,l] with lambda = " + rat_str(lambda)};
            return rep;
          }
        }
  rep.holds = true;
  rep.lambda = lambda;
  return rep;
}

template <>
inline PredicateReport<MPoly> check_conv_stable<MPoly>(
    const EndoT<MPoly>& t, const std::optional<MPoly>& lambda_hint) {
  PredicateReport<MPoly> rep{Predicate::kConvStable, false, {}, {}, "", {}};
  if (!lambda_hint)
    throw std::invalid_argument(
        "convolution stability over polynomial coefficients needs the "
        "stability scalar supplied up front; it is verified, not solved for");
  const MPoly& lambda = *lambda_hint;
  if (lambda.is_zero()) {
    rep.note = "the stability scalar must be nonzero";
    return rep;
  }
  const int n = t.n;
  PolyEndo tt = convolve(t, t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          MPoly diff = tt.at(i, j, k, l) - lambda * t.at(i, j, k, l);
          if (!diff.is_zero()) {
            rep.witness = Witness{"coefficient",
                                  {i + 1, j + 1, k + 1, l + 1},
                                  "(T*T - lambda T)[i,j,k,l] = " + diff.str()};
            return rep;
          }
        }
  rep.holds = true;
  rep.lambda = lambda;
  return rep;
}

template <class S>
PredicateReport<S> check_er(const EndoT<S>& t) {
  PredicateReport<S> rep{Predicate::kEr, true, {}, {}, "", {}};
  auto [first, second] = er_residuals(t);
  const int n = t.n;
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s, ++idx) {
              const bool bad1 = !ScalarOps<S>::is_zero(first[idx]);
              const bool bad2 = !ScalarOps<S>::is_zero(second[idx]);
              if (bad1 || bad2) {
                rep.holds = false;
                rep.witness = Witness{
                    "coefficient",
                    {i + 1, j + 1, k + 1, l + 1, r + 1, s + 1},
                    std::string(bad1 ? "T(T(a)b) != T(a)T(b)"
                                     : "T(a)T(b) != T(aT(b))") +
                        " at this index (residual " +
                        ScalarOps<S>::str(bad1 ? first[idx] : second[idx]) + ")"};
                return rep;
              }
            }
  return rep;
}

template <class S>
PredicateReport<S> check_normal(const EndoT<S>& t) {
  PredicateReport<S> rep{Predicate::kNormal, true, {}, {}, "", {}};
  Witness w;
  if (!is_central(t, &w)) {
    rep.holds = false;
    rep.witness = w;
    rep.note = "the map itself is not central";
    return rep;
  }
  if (!is_central(fourier(t), &w)) {
    rep.holds = false;
    rep.witness = w;
    rep.note = "the Fourier transform is not central";
    return rep;
  }
  return rep;
}

}  // namespace detail

/// Evaluates one predicate, returning a structured report with a witness on
/// failure.  For conv_stable over Rat the stability scalar is solved for
/// unless `lambda_hint` pins it; over MPoly a hint is mandatory.
template <class S>
PredicateReport<S> check_predicate(const EndoT<S>& t, Predicate which,
                                   const std::optional<S>& lambda_hint = {}) {
  switch (which) {
    case Predicate::kSelfdual:
      return detail::check_selfdual(t);
    case Predicate::kUnital:
      return detail::check_unital(t);
    case Predicate::kIdempotent:
      return detail::check_idempotent(t);
    case Predicate::kConvStable:
      return detail::check_conv_stable<S>(t, lambda_hint);
    case Predicate::kEr:
      return detail::check_er(t);
    case Predicate::kNormal:
      return detail::check_normal(t);
    case Predicate::kBiprojection: {
      PredicateReport<S> rep{Predicate::kBiprojection, true, {}, {}, "", {}};
      rep.parts.push_back(detail::check_selfdual(t));
      rep.parts.push_back(detail::check_unital(t));
      rep.parts.push_back(detail::check_idempotent(t));
      rep.parts.push_back(detail::check_conv_stable<S>(t, lambda_hint));
      for (const auto& part : rep.parts) {
        if (!part.holds) {
          rep.holds = false;
          rep.witness = part.witness;
          rep.note = "failed: " + predicate_name(part.predicate) +
                     (part.note.empty() ? "" : " (" + part.note + ")");
          break;
        }
      }
      if (rep.holds) rep.lambda = rep.parts.back().lambda;
      return rep;
    }
  }
  throw std::logic_error("unreachable predicate");
}

}  // namespace frobkit
