#include "endo.hpp"

namespace frobkit {

namespace {

Endo blank(int n) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  Endo t;
  t.n = n;
  t.a.assign(static_cast<std::size_t>(n) * n * n * n, Rat(0));
  return t;
}

}  // namespace

Endo identity_endo(int n) {
  Endo t = blank(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at(i, j, i, j) = 1;
  return t;
}

Endo diagonal_endo(int n) {
  Endo t = blank(n);
  for (int i = 0; i < n; ++i) t.at(i, i, i, i) = 1;
  return t;
}

Endo trace_endo(int n) {
  Endo t = blank(n);
  const Rat w = Rat(1) / n;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) t.at(i, i, k, k) = w;
  return t;
}

Endo zero_endo(int n) { return blank(n); }

RatMat matrix_of(const Endo& t) {
  const int n = t.n;
  RatMat m(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) m.at(k * n + l, i * n + j) = t.at(i, j, k, l);
  return m;
}

Endo endo_from_matrix(int n, const RatMat& m) {
  if (m.rows != n * n || m.cols != n * n)
    throw std::invalid_argument("matrix has the wrong shape for this algebra");
  Endo t = blank(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) t.at(i, j, k, l) = m.at(k * n + l, i * n + j);
  return t;
}

RatMat apply(const Endo& t, const RatMat& x) {
  const int n = t.n;
  if (x.rows != n || x.cols != n)
    throw std::invalid_argument("matrix has the wrong shape for this algebra");
  RatMat y(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      Rat acc = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += x.at(i, j) * t.at(i, j, k, l);
      y.at(k, l) = acc;
    }
  return y;
}

std::string predicate_name(Predicate p) {
  switch (p) {
    case Predicate::kSelfdual: return "selfdual";
    case Predicate::kUnital: return "unital";
    case Predicate::kIdempotent: return "idempotent";
    case Predicate::kConvStable: return "conv_stable";
    case Predicate::kEr: return "er";
    case Predicate::kNormal: return "normal";
    case Predicate::kBiprojection: return "biprojection";
  }
  return "?";
}

std::optional<Predicate> predicate_from_name(const std::string& name) {
  std::string canon = name;
  for (char& c : canon)
    if (c == '-') c = '_';
  if (canon == "selfdual") return Predicate::kSelfdual;
  if (canon == "unital") return Predicate::kUnital;
  if (canon == "idempotent") return Predicate::kIdempotent;
  if (canon == "conv_stable") return Predicate::kConvStable;
  if (canon == "er" || canon == "exchange") return Predicate::kEr;
  if (canon == "normal") return Predicate::kNormal;
  if (canon == "biprojection") return Predicate::kBiprojection;
  return std::nullopt;
}

}  // namespace frobkit
