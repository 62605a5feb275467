#include "tensor.hpp"

#include <cmath>

namespace frobkit {

std::size_t pow_size(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > (static_cast<std::size_t>(1) << 40) / base)
      throw std::invalid_argument("tensor map would be unreasonably large");
    r *= static_cast<std::size_t>(base);
  }
  return r;
}

TensorMap tm_identity(int d, int arity) {
  TensorMap f(d, arity, arity);
  f.mat = RatMat::identity(static_cast<int>(pow_size(d, arity)));
  return f;
}

TensorMap tm_compose(const TensorMap& f, const TensorMap& g) {
  if (f.d != g.d) throw std::invalid_argument("tensor maps have different dimensions");
  if (f.p != g.q)
    throw std::invalid_argument("composition arity mismatch: inner arities disagree");
  TensorMap r(f.d, g.p, f.q);
  r.mat = mat_mul(f.mat, g.mat);
  return r;
}

TensorMap tm_kron(const TensorMap& f, const TensorMap& g) {
  if (f.d != g.d) throw std::invalid_argument("tensor maps have different dimensions");
  TensorMap r(f.d, f.p + g.p, f.q + g.q);
  r.mat = mat_kron(f.mat, g.mat);
  return r;
}

FrobModel matrix_model(int n) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  const int d = n * n;
  FrobModel mdl;
  mdl.d = d;
  // Multiplication: E_{i,j} E_{k,l} = [j == k] E_{i,l}.
  mdl.m = TensorMap(d, 2, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        mdl.m.mat.at(i * n + l, (i * n + j) * d + (j * n + l)) = 1;
  // Unit: 1 |-> identity matrix.
  mdl.e = TensorMap(d, 0, 1);
  for (int i = 0; i < n; ++i) mdl.e.mat.at(i * n + i, 0) = 1;
  // Comultiplication: E_{a,b} |-> sum_q E_{a,q} (x) E_{q,b}.
  mdl.delta = TensorMap(d, 1, 2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int q = 0; q < n; ++q)
        mdl.delta.mat.at((a * n + q) * d + (q * n + b), a * n + b) = 1;
  // Counit: trace.
  mdl.eps = TensorMap(d, 1, 0);
  for (int a = 0; a < n; ++a) mdl.eps.mat.at(0, a * n + a) = 1;
  return mdl;
}

TensorMap endo_tensor(const Endo& t) {
  TensorMap f(t.n * t.n, 1, 1);
  f.mat = matrix_of(t);
  return f;
}

Endo tensor_endo(const TensorMap& f) {
  if (f.p != 1 || f.q != 1)
    throw std::invalid_argument("only (1,1) tensor maps describe endomorphisms");
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(f.d))));
  if (n * n != f.d)
    throw std::invalid_argument("dimension is not a perfect square");
  return endo_from_matrix(n, f.mat);
}

}  // namespace frobkit
