#include "eqs.hpp"

#include <stdexcept>
#include <string>

namespace frobkit {

int EquationSet::var_index(int i, int j, int k, int l) const {
  return (((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1);
}

EquationSet make_eqs(int n, MonomialOrder order) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  EquationSet es;
  es.n = n;
  std::vector<std::string> names;
  names.reserve(n * n * n * n + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          names.push_back("A_" + std::to_string(i) + "_" + std::to_string(j) +
                          "_" + std::to_string(k) + "_" + std::to_string(l));
  names.push_back("x");
  es.ring = make_ring(std::move(names), order);

  auto A = [&](int i, int j, int k, int l) {
    return MPoly::var(es.ring, es.var_index(i, j, k, l));
  };
  MPoly x = MPoly::var(es.ring, es.x_index());
  MPoly one = MPoly::constant(es.ring, Rat(1));

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          es.eqs1.push_back(A(i, j, k, l) - A(l, k, j, i));

  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      MPoly sum = MPoly::zero(es.ring);
      for (int i = 1; i <= n; ++i) sum = sum + A(i, i, k, l);
      if (k == l) sum = sum - one;
      es.eqs2.push_back(std::move(sum));
    }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          MPoly sum = MPoly::zero(es.ring);
          for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s)
              sum = sum + A(i, j, r, s) * A(r, s, k, l);
          es.eqs3.push_back(sum - A(i, j, k, l));
        }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          MPoly sum = MPoly::zero(es.ring);
          for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s)
              sum = sum + A(i, r, k, s) * A(r, j, s, l);
          es.eqs4.push_back(sum - x * A(i, j, k, l));
        }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s) {
              MPoly t1 = MPoly::zero(es.ring);
              MPoly t2 = MPoly::zero(es.ring);
              MPoly t3 = MPoly::zero(es.ring);
              for (int t = 1; t <= n; ++t) {
                t1 = t1 + A(i, j, t, k) * A(t, l, r, s);
                t2 = t2 + A(i, j, r, t) * A(k, l, t, s);
                t3 = t3 + A(k, l, j, t) * A(i, t, r, s);
              }
              es.eqs5.push_back(t1 - t2);
              es.eqs5.push_back(t2 - t3);
            }

  return es;
}

std::vector<Rat> equation_point(const std::vector<Rat>& coeffs, const Rat& x_value) {
  std::vector<Rat> point = coeffs;
  point.push_back(x_value);
  return point;
}

}  // namespace frobkit
