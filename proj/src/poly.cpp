#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace frobkit {

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order) {
  auto r = std::make_shared<Ring>();
  r->vars = std::move(vars);
  r->order = order;
  return r;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->order == b->order && a->vars == b->vars;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  r.deg = a.deg + b.deg;
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r = b;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= a.e[i];
  r.deg = b.deg - a.deg;
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (std::size_t i = 0; i < r.e.size(); ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

bool mono_equal(const Monomial& a, const Monomial& b) {
  return a.deg == b.deg && a.e == b.e;
}

bool mono_is_one(const Monomial& a) { return a.deg == 0; }

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::kLex) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
  }
  // degrevlex
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (std::size_t i = a.e.size(); i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

MPoly MPoly::zero(RingPtr ring) { return MPoly(std::move(ring), {}); }

MPoly MPoly::constant(RingPtr ring, Rat c) {
  std::vector<Term> t;
  if (!rat_is_zero(c)) t.push_back({Monomial::one(ring->nvars()), std::move(c)});
  return MPoly(std::move(ring), std::move(t));
}

MPoly MPoly::var(RingPtr ring, int idx, int power) {
  if (idx < 0 || idx >= ring->nvars())
    throw std::invalid_argument("variable index out of range");
  if (power < 0) throw std::invalid_argument("negative exponent");
  if (power == 0) return constant(std::move(ring), 1);
  Monomial m = Monomial::one(ring->nvars());
  m.e[idx] = power;
  m.deg = power;
  return MPoly(std::move(ring), {{std::move(m), Rat(1)}});
}

MPoly MPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder order = ring->order;
  for (const Term& t : terms)
    if (t.m.e.size() != static_cast<std::size_t>(ring->nvars()))
      throw std::invalid_argument("exponent vector length does not match ring");
  std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
    return mono_cmp(a.m, b.m, order) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && mono_equal(out.back().m, t.m))
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (!out.empty() && rat_is_zero(out.back().c)) out.pop_back();
  }
  return MPoly(std::move(ring), std::move(out));
}

const Term& MPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

MPoly MPoly::operator-() const { return scaled(Rat(-1)); }

namespace {

// Merge two canonical term lists with coefficients scale_a, scale_b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                        MonomialOrder order, const Rat* scale_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i >= a.size())
      c = -1;
    else if (j >= b.size())
      c = 1;
    else
      c = mono_cmp(a[i].m, b[j].m, order);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (scale_b) t.c *= *scale_b;
      if (!rat_is_zero(t.c)) out.push_back(std::move(t));
    } else {
      Rat s = b[j].c;
      if (scale_b) s *= *scale_b;
      s += a[i].c;
      if (!rat_is_zero(s)) out.push_back({a[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly MPoly::operator+(const MPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("ring mismatch");
  return MPoly(ring_, merge(terms_, o.terms_, ring_->order, nullptr));
}

MPoly MPoly::operator-(const MPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("ring mismatch");
  static const Rat kMinusOne(-1);
  return MPoly(ring_, merge(terms_, o.terms_, ring_->order, &kMinusOne));
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("ring mismatch");
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const Term& s : terms_)
    for (const Term& t : o.terms_) acc.push_back({mono_mul(s.m, t.m), s.c * t.c});
  return from_terms(ring_, std::move(acc));
}

bool MPoly::operator==(const MPoly& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!mono_equal(terms_[i].m, o.terms_[i].m) || terms_[i].c != o.terms_[i].c)
      return false;
  return true;
}

MPoly MPoly::scaled(const Rat& c) const {
  if (rat_is_zero(c)) return zero(ring_);
  std::vector<Term> t = terms_;
  for (Term& x : t) x.c *= c;
  return MPoly(ring_, std::move(t));
}

MPoly MPoly::mul_mono(const Monomial& m) const {
  std::vector<Term> t = terms_;
  for (Term& x : t) x.m = mono_mul(x.m, m);
  return MPoly(ring_, std::move(t));
}

MPoly MPoly::tail() const {
  if (terms_.empty()) return *this;
  return MPoly(ring_, {terms_.begin() + 1, terms_.end()});
}

MPoly MPoly::sub_mul_term(const Term& t, const MPoly& g) const {
  std::vector<Term> shifted;
  shifted.reserve(g.terms_.size());
  for (const Term& s : g.terms_)
    shifted.push_back({mono_mul(s.m, t.m), s.c * t.c});
  static const Rat kMinusOne(-1);
  return MPoly(ring_, merge(terms_, shifted, ring_->order, &kMinusOne));
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  Rat inv = 1 / terms_.front().c;
  return scaled(inv);
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
  if (point.size() != static_cast<std::size_t>(ring_->nvars()))
    throw std::invalid_argument("evaluation point has wrong length");
  Rat acc(0);
  for (const Term& t : terms_) {
    Rat v = t.c;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (int k = 0; k < t.m.e[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rat c = t.c;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    bool printed = false;
    if (c != 1 || mono_is_one(t.m)) {
      os << rat_str(c);
      printed = true;
    }
    for (std::size_t i = 0; i < t.m.e.size(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (printed) os << "*";
      os << ring_->vars[i];
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
      printed = true;
    }
  }
  return os.str();
}

MPoly operator*(const Rat& c, const MPoly& p) { return p.scaled(c); }

MPoly operator+(const MPoly& p, const Rat& c) {
  return p + MPoly::constant(p.ring(), c);
}

MPoly operator-(const MPoly& p, const Rat& c) {
  return p - MPoly::constant(p.ring(), c);
}

}  // namespace frobkit
