#include "frobalg.hpp"

#include <utility>

namespace frobkit {

namespace {

std::size_t cube(int d) { return static_cast<std::size_t>(d) * d * d; }

std::string ones(std::initializer_list<int> idx) {
  std::string s = "(";
  bool first = true;
  for (int i : idx) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + ")";
}

void check_algebra_axioms(const FrobAlgebra& alg, std::vector<FrobCheckIssue>& out) {
  const int d = alg.d;
  // Associativity: (e_i e_j) e_k = e_i (e_j e_k).
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int m = 0; m < d; ++m) {
          Rat lhs = 0, rhs = 0;
          for (int t = 0; t < d; ++t) {
            lhs += alg.cc(i, j, t) * alg.cc(t, k, m);
            rhs += alg.cc(j, k, t) * alg.cc(i, t, m);
          }
          if (lhs != rhs) {
            out.push_back({"associativity",
                           "(e_i e_j) e_k != e_i (e_j e_k) at (i,j,k) = " +
                               ones({i, j, k}) + ", coordinate " +
                               std::to_string(m + 1)});
            return;
          }
        }
  // Two-sided unitality.
  for (int i = 0; i < d; ++i) {
    std::vector<Rat> basis(d, Rat(0));
    basis[i] = 1;
    if (alg.mul(alg.unit, basis) != basis || alg.mul(basis, alg.unit) != basis) {
      out.push_back({"unitality",
                     "the declared unit does not act as identity on basis "
                     "vector " + std::to_string(i + 1)});
      return;
    }
  }
}

void check_coalgebra_axioms(const FrobAlgebra& alg, std::vector<FrobCheckIssue>& out) {
  const int d = alg.d;
  // Counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta.
  for (int i = 0; i < d; ++i)
    for (int q = 0; q < d; ++q) {
      Rat left = 0, right = 0;
      for (int p = 0; p < d; ++p) {
        left += alg.counit[p] * alg.dl(i, p, q);
        right += alg.counit[p] * alg.dl(i, q, p);
      }
      Rat want = (i == q) ? Rat(1) : Rat(0);
      if (left != want || right != want) {
        out.push_back({"counitality",
                       "a counit law fails on basis vector " + std::to_string(i + 1)});
        return;
      }
    }
  // Coassociativity.
  for (int i = 0; i < d; ++i)
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q)
        for (int r = 0; r < d; ++r) {
          Rat lhs = 0, rhs = 0;
          for (int t = 0; t < d; ++t) {
            lhs += alg.dl(i, t, r) * alg.dl(t, p, q);
            rhs += alg.dl(i, p, t) * alg.dl(t, q, r);
          }
          if (lhs != rhs) {
            out.push_back({"coassociativity",
                           "(Delta (x) id) Delta != (id (x) Delta) Delta at " +
                               ones({i, p, q, r})});
            return;
          }
        }
  // Frobenius condition: (id (x) m)(Delta (x) id) = Delta m = (m (x) id)(id (x) Delta).
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
          Rat mid = 0, lhs = 0, rhs = 0;
          for (int t = 0; t < d; ++t) {
            mid += alg.cc(i, j, t) * alg.dl(t, p, q);
            lhs += alg.dl(i, p, t) * alg.cc(t, j, q);
            rhs += alg.dl(j, t, q) * alg.cc(i, t, p);
          }
          if (lhs != mid || rhs != mid) {
            out.push_back({"frobenius-condition",
                           "the Frobenius condition fails on basis pair " +
                               ones({i, j}) + " at output " + ones({p, q})});
            return;
          }
        }
}

std::vector<Rat> derived_comul(const FrobAlgebra& alg) {
  const int d = alg.d;
  std::vector<Rat> comul(cube(d), Rat(0));
  // Delta(e_i) = sum_m (e_i e_m) (x) e_m'.
  for (int i = 0; i < d; ++i)
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) {
        Rat acc = 0;
        for (int m = 0; m < d; ++m)
          acc += alg.cc(i, m, p) * alg.dualbasis.at(q, m);
        comul[(static_cast<std::size_t>(i) * d + p) * d + q] = acc;
      }
  return comul;
}

FrobAlgebra build(int d, std::vector<Rat> c, std::vector<Rat> unit,
                  std::vector<Rat> counit, std::vector<Rat>* supplied_comul) {
  if (d < 1) throw std::invalid_argument("algebra dimension must be at least 1");
  if (c.size() != cube(d) || unit.size() != static_cast<std::size_t>(d) ||
      counit.size() != static_cast<std::size_t>(d))
    throw std::invalid_argument("structure data has the wrong shape");

  FrobAlgebra alg;
  alg.d = d;
  alg.c = std::move(c);
  alg.unit = std::move(unit);
  alg.counit = std::move(counit);

  std::vector<FrobCheckIssue> issues;
  check_algebra_axioms(alg, issues);

  alg.gram = RatMat(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rat g = 0;
      for (int k = 0; k < d; ++k) g += alg.cc(i, j, k) * alg.counit[k];
      alg.gram.at(i, j) = g;
    }
  auto inv = mat_inverse(alg.gram);
  if (!inv) {
    issues.push_back({"gram",
                      "the form (a,b) |-> eps(ab) is degenerate with respect "
                      "to the bilinear form pairing on this basis"});
  } else {
    alg.gram_inv = *inv;
    alg.dualbasis = alg.gram_inv;  // column j = coordinates of e_j'
    alg.comul = supplied_comul ? std::move(*supplied_comul) : derived_comul(alg);
    if (alg.comul.size() != cube(d))
      throw std::invalid_argument("comultiplication data has the wrong shape");
    if (supplied_comul && alg.comul != derived_comul(alg))
      issues.push_back({"comultiplication",
                        "the supplied comultiplication differs from the one "
                        "determined by the dual bases"});
    check_coalgebra_axioms(alg, issues);
  }

  if (!issues.empty()) {
    std::string what = "not a Frobenius algebra:";
    for (const auto& iss : issues) what += " [" + iss.axiom + "] " + iss.message + ";";
    throw FrobValidationError(what, std::move(issues));
  }
  return alg;
}

}  // namespace

std::vector<Rat> FrobAlgebra::mul(const std::vector<Rat>& x,
                                  const std::vector<Rat>& y) const {
  std::vector<Rat> z(d, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (rat_is_zero(x[i])) continue;
    for (int j = 0; j < d; ++j) {
      if (rat_is_zero(y[j])) continue;
      const Rat xy = x[i] * y[j];
      for (int k = 0; k < d; ++k) z[k] += xy * cc(i, j, k);
    }
  }
  return z;
}

Rat FrobAlgebra::eps(const std::vector<Rat>& x) const {
  Rat r = 0;
  for (int i = 0; i < d; ++i) r += x[i] * counit[i];
  return r;
}

FrobAlgebra make_general_frobenius(int d, std::vector<Rat> c,
                                   std::vector<Rat> unit,
                                   std::vector<Rat> counit) {
  return build(d, std::move(c), std::move(unit), std::move(counit), nullptr);
}

FrobAlgebra make_frobenius_with_comul(int d, std::vector<Rat> c,
                                      std::vector<Rat> unit,
                                      std::vector<Rat> counit,
                                      std::vector<Rat> comul) {
  return build(d, std::move(c), std::move(unit), std::move(counit), &comul);
}

std::vector<FrobCheckIssue> validate_structure(const FrobAlgebra& alg) {
  std::vector<FrobCheckIssue> issues;
  check_algebra_axioms(alg, issues);
  if (!mat_inverse(alg.gram)) {
    issues.push_back({"gram",
                      "the form (a,b) |-> eps(ab) is degenerate with respect "
                      "to the bilinear form pairing on this basis"});
  } else {
    check_coalgebra_axioms(alg, issues);
  }
  return issues;
}

FrobAlgebra cayley_hamilton_subalgebra(const RatMat& x) {
  if (x.rows != 2 || x.cols != 2)
    throw std::invalid_argument("expected a 2 x 2 matrix");
  const Rat tr = x.at(0, 0) + x.at(1, 1);
  const Rat det = x.at(0, 0) * x.at(1, 1) - x.at(0, 1) * x.at(1, 0);
  const bool scalar = rat_is_zero(x.at(0, 1)) && rat_is_zero(x.at(1, 0)) &&
                      x.at(0, 0) == x.at(1, 1);
  if (scalar)
    throw std::invalid_argument(
        "generator is a scalar matrix, so {I, X} does not span a "
        "two-dimensional algebra");
  // Basis u_1 = I, u_2 = X; Cayley-Hamilton closes the product:
  // X^2 = tr(X) X - det(X) I.
  std::vector<Rat> c(8, Rat(0));
  auto at = [&](int i, int j, int k) -> Rat& { return c[(i * 2 + j) * 2 + k]; };
  at(0, 0, 0) = 1;
  at(0, 1, 1) = 1;
  at(1, 0, 1) = 1;
  at(1, 1, 0) = -det;
  at(1, 1, 1) = tr;
  return make_general_frobenius(2, std::move(c), {Rat(1), Rat(0)}, {Rat(2), tr});
}

FrobModel model_from(const FrobAlgebra& alg) {
  const int d = alg.d;
  FrobModel mdl;
  mdl.d = d;
  mdl.m = TensorMap(d, 2, 1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) mdl.m.mat.at(k, i * d + j) = alg.cc(i, j, k);
  mdl.e = TensorMap(d, 0, 1);
  for (int i = 0; i < d; ++i) mdl.e.mat.at(i, 0) = alg.unit[i];
  mdl.delta = TensorMap(d, 1, 2);
  for (int i = 0; i < d; ++i)
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) mdl.delta.mat.at(p * d + q, i) = alg.dl(i, p, q);
  mdl.eps = TensorMap(d, 1, 0);
  for (int i = 0; i < d; ++i) mdl.eps.mat.at(0, i) = alg.counit[i];
  return mdl;
}

RatMat alg_dual(const FrobAlgebra& alg, const RatMat& m) {
  return mat_mul(mat_mul(alg.gram_inv, mat_transpose(m)), alg.gram);
}

RatMat alg_convolve(const FrobAlgebra& alg, const RatMat& f, const RatMat& g) {
  const int d = alg.d;
  if (f.rows != d || f.cols != d || g.rows != d || g.cols != d)
    throw std::invalid_argument("endomorphism matrix has the wrong shape");
  RatMat out(d, d);
  for (int i = 0; i < d; ++i) {
    std::vector<Rat> acc(d, Rat(0));
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) {
        const Rat& w = alg.dl(i, p, q);
        if (rat_is_zero(w)) continue;
        std::vector<Rat> fp(d), gq(d);
        for (int r = 0; r < d; ++r) {
          fp[r] = f.at(r, p);
          gq[r] = g.at(r, q);
        }
        std::vector<Rat> prod = alg.mul(fp, gq);
        for (int r = 0; r < d; ++r) acc[r] += w * prod[r];
      }
    for (int r = 0; r < d; ++r) out.at(r, i) = acc[r];
  }
  return out;
}

namespace {

std::optional<Witness> first_matrix_diff(const RatMat& a, const RatMat& b,
                                         const std::string& what) {
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c)
      if (a.at(r, c) != b.at(r, c))
        return Witness{"matrix-entry",
                       {r + 1, c + 1},
                       what + ": " + rat_str(a.at(r, c)) + " vs " +
                           rat_str(b.at(r, c))};
  return std::nullopt;
}

}  // namespace

PredicateReport<Rat> alg_check_predicate(const FrobAlgebra& alg, const RatMat& m,
                                         Predicate which,
                                         const std::optional<Rat>& lambda_hint) {
  const int d = alg.d;
  if (m.rows != d || m.cols != d)
    throw std::invalid_argument("endomorphism matrix has the wrong shape");
  PredicateReport<Rat> rep{which, true, {}, {}, "", {}};
  switch (which) {
    case Predicate::kSelfdual: {
      if (auto w = first_matrix_diff(m, alg_dual(alg, m), "T vs T*")) {
        rep.holds = false;
        rep.witness = *w;
      }
      return rep;
    }
    case Predicate::kUnital: {
      std::vector<Rat> img(d, Rat(0));
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) img[r] += m.at(r, c) * alg.unit[c];
      for (int r = 0; r < d; ++r)
        if (img[r] != alg.unit[r]) {
          rep.holds = false;
          rep.witness = Witness{"coordinate",
                                {r + 1},
                                "T(1) has coordinate " + rat_str(img[r]) +
                                    ", the unit has " + rat_str(alg.unit[r])};
          return rep;
        }
      return rep;
    }
    case Predicate::kIdempotent: {
      if (auto w = first_matrix_diff(mat_mul(m, m), m, "T^2 vs T")) {
        rep.holds = false;
        rep.witness = *w;
      }
      return rep;
    }
    case Predicate::kConvStable: {
      rep.holds = false;
      RatMat conv = alg_convolve(alg, m, m);
      Rat lambda;
      if (lambda_hint) {
        lambda = *lambda_hint;
      } else {
        int fr = -1, fc = -1;
        for (int r = 0; r < d && fr < 0; ++r)
          for (int c = 0; c < d; ++c)
            if (!rat_is_zero(m.at(r, c))) {
              fr = r;
              fc = c;
              break;
            }
        if (fr < 0) {
          rep.note = "the zero map is not convolution-stable (lambda must be nonzero)";
          return rep;
        }
        lambda = conv.at(fr, fc) / m.at(fr, fc);
      }
      if (rat_is_zero(lambda)) {
        rep.note = "T*T = lambda T would force lambda = 0, but lambda must be nonzero";
        return rep;
      }
      if (auto w = first_matrix_diff(conv, mat_scale(m, lambda),
                                     "T*T vs lambda T (lambda = " +
                                         rat_str(lambda) + ")")) {
        rep.witness = *w;
        return rep;
      }
      rep.holds = true;
      rep.lambda = lambda;
      return rep;
    }
    case Predicate::kEr: {
      auto apply_m = [&](const std::vector<Rat>& v) {
        std::vector<Rat> out(d, Rat(0));
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) out[r] += m.at(r, c) * v[c];
        return out;
      };
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          std::vector<Rat> ei(d, Rat(0)), ej(d, Rat(0));
          ei[i] = 1;
          ej[j] = 1;
          std::vector<Rat> ti = apply_m(ei), tj = apply_m(ej);
          std::vector<Rat> t1 = apply_m(alg.mul(ti, ej));
          std::vector<Rat> t2 = alg.mul(ti, tj);
          std::vector<Rat> t3 = apply_m(alg.mul(ei, tj));
          const bool bad1 = t1 != t2, bad2 = t2 != t3;
          if (bad1 || bad2) {
            rep.holds = false;
            rep.witness = Witness{"basis-pair",
                                  {i + 1, j + 1},
                                  bad1 ? "T(T(a)b) != T(a)T(b) on this basis pair"
                                       : "T(a)T(b) != T(aT(b)) on this basis pair"};
            return rep;
          }
        }
      return rep;
    }
    case Predicate::kNormal: {
      // Central means a scalar multiple of the identity of End(A); likewise
      // for the Fourier transform inside End(A (x) A).
      auto scalar_check = [](const RatMat& mm) -> std::optional<Witness> {
        const Rat c0 = mm.at(0, 0);
        for (int r = 0; r < mm.rows; ++r)
          for (int c = 0; c < mm.cols; ++c) {
            Rat want = (r == c) ? c0 : Rat(0);
            if (mm.at(r, c) != want)
              return Witness{"matrix-entry",
                             {r + 1, c + 1},
                             "not a scalar multiple of the identity"};
          }
        return std::nullopt;
      };
      if (auto w = scalar_check(m)) {
        rep.holds = false;
        rep.witness = *w;
        rep.note = "the map itself is not central";
        return rep;
      }
      FrobModel mdl = model_from(alg);
      TensorMap a{d, 1, 1};
      a.mat = m;
      TensorMap id1 = tm_identity(d);
      TensorMap f = tm_compose(
          tm_compose(tm_kron(id1, mdl.m), tm_kron(tm_kron(id1, a), id1)),
          tm_kron(mdl.delta, id1));
      if (auto w = scalar_check(f.mat)) {
        rep.holds = false;
        rep.witness = *w;
        rep.note = "the Fourier transform is not central";
      }
      return rep;
    }
    case Predicate::kBiprojection: {
      rep.parts.push_back(alg_check_predicate(alg, m, Predicate::kSelfdual));
      rep.parts.push_back(alg_check_predicate(alg, m, Predicate::kUnital));
      rep.parts.push_back(alg_check_predicate(alg, m, Predicate::kIdempotent));
      rep.parts.push_back(
          alg_check_predicate(alg, m, Predicate::kConvStable, lambda_hint));
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
