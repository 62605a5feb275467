#include "families.hpp"

#include <stdexcept>

#include "poly.hpp"

namespace frobkit {

namespace {

/// Writes T(E_{i,j}) = block as a 2 x 2 matrix of coefficients,
/// block[k][l] = coefficient of E_{k,l}.
void set_block(Endo& t, int i, int j, const Rat (&block)[2][2]) {
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) t.at(i, j, k, l) = block[k][l];
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "identity", "diagonal", "trace", "bipro3-1", "bipro3-2", "bipro3-3"};
  return names;
}

Endo family_endo(const std::string& name, int n, const std::vector<Rat>& params) {
  require(n >= 1, "matrix size must be positive");
  if (name == "identity" || name == "diagonal" || name == "trace") {
    require(params.empty(), "family " + name + " takes no parameters");
    if (name == "identity") return identity_endo(n);
    if (name == "diagonal") return diagonal_endo(n);
    return trace_endo(n);
  }
  require(name == "bipro3-1" || name == "bipro3-2" || name == "bipro3-3",
          "unknown family '" + name + "'");
  require(n == 2, "family " + name + " is defined on M_2 only");

  Endo t = zero_endo(2);
  if (name == "bipro3-1") {
    require(params.size() == 1, "family bipro3-1 takes one parameter s");
    const Rat& s = params[0];
    set_block(t, 0, 0, {{Rat(1), -s}, {Rat(0), Rat(0)}});
    set_block(t, 1, 0, {{-s, 2 * s * s}, {Rat(0), s}});
    set_block(t, 1, 1, {{Rat(0), s}, {Rat(0), Rat(1)}});
    return t;
  }
  if (name == "bipro3-2") {
    require(params.size() == 1, "family bipro3-2 takes one parameter u");
    const Rat& u = params[0];
    require(!rat_is_zero(u), "parameter u must be nonzero");
    const Rat half = Rat(1) / 2;
    set_block(t, 0, 0, {{half, Rat(0)}, {Rat(0), half}});
    set_block(t, 0, 1, {{Rat(0), half}, {Rat(1) / (4 * u), Rat(0)}});
    set_block(t, 1, 0, {{Rat(0), u}, {half, Rat(0)}});
    set_block(t, 1, 1, {{half, Rat(0)}, {Rat(0), half}});
    return t;
  }
  require(params.size() == 2, "family bipro3-3 takes two parameters k, t");
  const Rat& k = params[0];
  const Rat& tt = params[1];
  require(k != Rat(1) / 2, "parameter k must differ from 1/2");
  require(!rat_is_zero(tt), "parameter t must be nonzero");
  const Rat w = (k - 1) * (k - Rat(1) / 2) / tt;  // (k-1)(k-1/2)/t
  set_block(t, 0, 0, {{k, w}, {-tt, 1 - k}});
  set_block(t, 0, 1, {{-tt, 1 - k}, {tt * tt / (k - Rat(1) / 2), tt}});
  set_block(t, 1, 0, {{w, (k - 1) * w / tt}, {1 - k, -w}});
  set_block(t, 1, 1, {{1 - k, -w}, {tt, k}});
  return t;
}

PolyEndo family_bipro3_1_poly() {
  RingPtr ring = make_ring({"s"}, MonomialOrder::kDegrevlex);
  const MPoly s = MPoly::var(ring, 0);
  const MPoly zero = MPoly::zero(ring);
  PolyEndo t;
  t.n = 2;
  t.a.assign(16, zero);
  t.at(0, 0, 0, 0) = MPoly::constant(ring, Rat(1));
  t.at(0, 0, 0, 1) = Rat(-1) * s;
  t.at(1, 0, 0, 0) = Rat(-1) * s;
  t.at(1, 0, 0, 1) = Rat(2) * (s * s);
  t.at(1, 0, 1, 1) = s;
  t.at(1, 1, 0, 1) = s;
  t.at(1, 1, 1, 1) = MPoly::constant(ring, Rat(1));
  return t;
}

}  // namespace frobkit
