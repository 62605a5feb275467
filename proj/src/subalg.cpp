#include "subalg.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>

#include "tensor.hpp"

namespace frobkit {

namespace {

std::string ones(std::initializer_list<int> idx) {
  std::string s = "(";
  bool first = true;
  for (int i : idx) {
    if (!first) s += ", ";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + ")";
}

/// The trace pairing G[(a,b)][(c,d)] = Tr(E_{a,b} E_{c,d}) on M_n, read off
/// the model's evaluation tensor so the convention matches the diagrams.
RatMat ambient_gram(const FrobModel& mdl) {
  const TensorMap ev = mdl.ev();
  RatMat g(mdl.d, mdl.d);
  for (int a = 0; a < mdl.d; ++a)
    for (int b = 0; b < mdl.d; ++b) g.at(a, b) = ev.mat.at(0, a * mdl.d + b);
  return g;
}

/// Coefficients C[p][q] of coev = sum C[p][q] e_p (x) e_q from the model.
RatMat ambient_coev(const FrobModel& mdl) {
  const TensorMap coev = mdl.coev();
  RatMat c(mdl.d, mdl.d);
  for (int p = 0; p < mdl.d; ++p)
    for (int q = 0; q < mdl.d; ++q) c.at(p, q) = coev.mat.at(p * mdl.d + q, 0);
  return c;
}

struct InducedTensors {
  int r = 0;
  std::vector<Rat> c;       // ((i*r)+j)*r+k
  std::vector<Rat> unit;    // r
  std::vector<Rat> counit;  // r
  std::vector<Rat> comul;   // ((i*r)+p)*r+q
};

InducedTensors transport(const SplitData& s) {
  const FrobModel mdl = matrix_model(s.b.n);
  const int r = s.rank;
  const RatMat uu = mat_kron(s.u, s.u);
  const RatMat vv = mat_kron(s.v, s.v);
  const RatMat m_y = mat_mul(mat_mul(s.v, mdl.m.mat), uu);           // r x r^2
  const RatMat e_y = mat_mul(s.v, mdl.e.mat);                        // r x 1
  const RatMat delta_y = mat_mul(mat_mul(vv, mdl.delta.mat), s.u);   // r^2 x r
  const RatMat eps_y = mat_mul(mdl.eps.mat, s.u);                    // 1 x r

  InducedTensors t;
  t.r = r;
  t.c.assign(static_cast<std::size_t>(r) * r * r, Rat(0));
  t.comul.assign(static_cast<std::size_t>(r) * r * r, Rat(0));
  t.unit.resize(r);
  t.counit.resize(r);
  for (int i = 0; i < r; ++i) {
    t.unit[i] = e_y.at(i, 0);
    t.counit[i] = eps_y.at(0, i);
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        t.c[(static_cast<std::size_t>(i) * r + j) * r + k] = m_y.at(k, i * r + j);
    for (int p = 0; p < r; ++p)
      for (int q = 0; q < r; ++q)
        t.comul[(static_cast<std::size_t>(i) * r + p) * r + q] =
            delta_y.at(p * r + q, i);
  }
  return t;
}

/// Populates the struct without the validating factory, for the lenient
/// path; gram_inv and dualbasis stay empty when the form is singular.
FrobAlgebra assemble_unchecked(InducedTensors t) {
  FrobAlgebra alg;
  alg.d = t.r;
  alg.c = std::move(t.c);
  alg.unit = std::move(t.unit);
  alg.counit = std::move(t.counit);
  alg.comul = std::move(t.comul);
  alg.gram = RatMat(alg.d, alg.d);
  for (int i = 0; i < alg.d; ++i)
    for (int j = 0; j < alg.d; ++j) {
      Rat g = 0;
      for (int k = 0; k < alg.d; ++k) g += alg.cc(i, j, k) * alg.counit[k];
      alg.gram.at(i, j) = g;
    }
  if (auto inv = mat_inverse(alg.gram)) {
    alg.gram_inv = *inv;
    alg.dualbasis = *inv;
  }
  return alg;
}

/// f* for f : A -> B between objects with the given evaluation form on B
/// and coevaluation coefficients on A:  f* = C_A . f^T . G_B  (B -> A).
RatMat adjoint_of(const RatMat& f, const RatMat& coev_a, const RatMat& gram_b) {
  return mat_mul(mat_mul(coev_a, mat_transpose(f)), gram_b);
}

EmbeddingCheck compare(const std::string& name, const RatMat& got,
                       const RatMat& want) {
  EmbeddingCheck chk{name, true, ""};
  for (int i = 0; i < got.rows && chk.holds; ++i)
    for (int j = 0; j < got.cols; ++j)
      if (got.at(i, j) != want.at(i, j)) {
        chk.holds = false;
        chk.detail = "first difference at entry " + ones({i, j}) + ": " +
                     rat_str(got.at(i, j)) + " vs " + rat_str(want.at(i, j));
        break;
      }
  return chk;
}

}  // namespace

SplitData split_idempotent(const Endo& b) {
  const Endo bb = compose(b, b);
  const int n = b.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (bb.at(i, j, k, l) != b.at(i, j, k, l))
            throw std::invalid_argument(
                "not idempotent: b(b(E" + ones({i, j}) + ")) and b(E" +
                ones({i, j}) + ") differ in the coefficient of E" + ones({k, l}));

  const RatMat m = matrix_of(b);
  RatMat r = mat_transpose(m);
  const std::vector<int> pivots = rref_in_place(r);
  const int rank = static_cast<int>(pivots.size());

  SplitData s;
  s.b = b;
  s.rank = rank;
  s.u = RatMat(m.rows, rank);
  s.v = RatMat(rank, m.cols);
  for (int i = 0; i < rank; ++i)
    for (int c = 0; c < m.rows; ++c) s.u.at(c, i) = r.at(i, c);
  for (int i = 0; i < rank; ++i)
    for (int c = 0; c < m.cols; ++c) s.v.at(i, c) = m.at(pivots[i], c);
  return s;
}

InducedAlgebra induce_structure(const SplitData& split) {
  InducedTensors t = transport(split);
  InducedAlgebra out;
  out.Y = make_frobenius_with_comul(t.r, std::move(t.c), std::move(t.unit),
                                    std::move(t.counit), std::move(t.comul));
  return out;
}

InducedAlgebra induce_structure_lenient(const SplitData& split) {
  InducedAlgebra out;
  out.Y = assemble_unchecked(transport(split));
  out.issues = validate_structure(out.Y);
  return out;
}

EmbeddingReport verify_embedding(const SplitData& split,
                                 const InducedAlgebra& induced) {
  const FrobModel mdl = matrix_model(split.b.n);
  const FrobAlgebra& y = induced.Y;
  const int r = y.d;

  RatMat m_y(r, r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) m_y.at(k, i * r + j) = y.cc(i, j, k);
  RatMat e_y(r, 1);
  for (int i = 0; i < r; ++i) e_y.at(i, 0) = y.unit[i];

  // coev_Y = delta_Y o e_Y, as an r x r coefficient matrix.
  RatMat coev_y(r, r);
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q) {
      Rat acc = 0;
      for (int i = 0; i < r; ++i) acc += y.unit[i] * y.dl(i, p, q);
      coev_y.at(p, q) = acc;
    }
  // ev_Y = eps_Y o m_Y is exactly the induced Gram matrix.
  const RatMat& gram_y = y.gram;
  const RatMat gram_x = ambient_gram(mdl);
  const RatMat coev_x = ambient_coev(mdl);

  EmbeddingReport rep;
  rep.checks.push_back(compare("algebra-morphism", mat_mul(split.u, m_y),
                               mat_mul(mdl.m.mat, mat_kron(split.u, split.u))));
  rep.checks.push_back(
      compare("unital-morphism", mat_mul(split.u, e_y), mdl.e.mat));
  rep.checks.push_back(
      compare("u*-equals-v", adjoint_of(split.u, coev_y, gram_x), split.v));
  rep.checks.push_back(
      compare("v*-equals-u", adjoint_of(split.v, coev_x, gram_y), split.u));
  return rep;
}

Endo subalgebra_to_idempotent(const RatMat& span_columns, int n) {
  const int d = n * n;
  if (span_columns.rows != d || span_columns.cols < 1 || span_columns.cols > d)
    throw SubalgebraRejection(
        "invalid-span", "expected between 1 and " + std::to_string(d) +
                            " columns of length " + std::to_string(d));
  const int r = span_columns.cols;
  {
    RatMat probe = mat_transpose(span_columns);
    if (static_cast<int>(rref_in_place(probe).size()) < r)
      throw SubalgebraRejection("invalid-span",
                                "the span columns are linearly dependent");
  }

  // Multiply two coordinate columns as n x n matrices.
  auto column = [&](int j) {
    RatMat x(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) x.at(a, b) = span_columns.at(a * n + b, j);
    return x;
  };
  auto flat = [&](const RatMat& x) {
    RatMat w(d, 1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) w.at(a * n + b, 0) = x.at(a, b);
    return w;
  };

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!mat_solve(span_columns, flat(mat_mul(column(i), column(j)))))
        throw SubalgebraRejection(
            "not-closed", "the product of span elements " + std::to_string(i + 1) +
                              " and " + std::to_string(j + 1) +
                              " lies outside the span");
  if (!mat_solve(span_columns, flat(RatMat::identity(n))))
    throw SubalgebraRejection("unit-missing",
                              "the identity matrix is not in the span");

  // Restricted Gram G_Y[i][j] = Tr(u_i u_j); its inverse defines
  // i*(a) = G_Y^{-1} . (Tr(u_1 a), ..., Tr(u_r a)).
  RatMat gram_y(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const RatMat p = mat_mul(column(i), column(j));
      Rat tr = 0;
      for (int a = 0; a < n; ++a) tr += p.at(a, a);
      gram_y.at(i, j) = tr;
    }
  auto gram_y_inv = mat_inverse(gram_y);
  if (!gram_y_inv)
    throw SubalgebraRejection(
        "degenerate-form",
        "the span is degenerate with respect to the bilinear form "
        "(a, b) |-> Tr(ab); a Frobenius subalgebra requires the restricted "
        "form to be nondegenerate");

  const FrobModel mdl = matrix_model(n);
  const RatMat gram_x = ambient_gram(mdl);
  const RatMat b_mat = mat_mul(
      mat_mul(span_columns, *gram_y_inv),
      mat_mul(mat_transpose(span_columns), gram_x));
  Endo b = endo_from_matrix(n, b_mat);

  for (Predicate p : {Predicate::kSelfdual, Predicate::kUnital,
                      Predicate::kIdempotent, Predicate::kEr}) {
    auto rep = check_predicate(b, p);
    if (!rep.holds)
      throw SubalgebraRejection(
          "verification-failed",
          "the induced idempotent unexpectedly fails " + predicate_name(p) +
              (rep.witness ? ": " + rep.witness->detail : std::string()));
  }
  return b;
}

}  // namespace frobkit
