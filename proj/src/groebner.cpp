#include "groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace frobkit {

Ideal make_ideal(RingPtr ring, std::vector<MPoly> gens) {
  for (const MPoly& g : gens)
    if (!same_ring(ring, g.ring()))
      throw std::invalid_argument("ideal generator from a different ring");
  return Ideal{std::move(ring), std::move(gens)};
}

MPoly normal_form(const MPoly& p, const std::vector<MPoly>& basis) {
  const RingPtr& ring = p.ring();
  MPoly work = p;
  std::vector<Term> rem;  // built in strictly descending order
  while (!work.is_zero()) {
    const Term& lt = work.leading();
    bool reduced = false;
    for (const MPoly& g : basis) {
      if (g.is_zero()) continue;
      if (!same_ring(ring, g.ring()))
        throw std::invalid_argument("normal form across different rings");
      const Term& glt = g.leading();
      if (mono_divides(glt.m, lt.m)) {
        work = work.sub_mul_term({mono_div(lt.m, glt.m), lt.c / glt.c}, g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(lt);
      work = work.tail();
    }
  }
  return MPoly::from_terms(ring, std::move(rem));
}

MPoly normal_form(const MPoly& p, const GroebnerBasis& gb) {
  return normal_form(p, gb.basis);
}

namespace {

struct Pair {
  int i, j;  // indices into the basis, i < j
  Monomial lcm;
  int sugar;
};

struct PairCmp {
  MonomialOrder order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (int c = mono_cmp(a.lcm, b.lcm, order); c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

class Buchberger {
 public:
  Buchberger(MonomialOrder order, const GBOptions& opts)
      : pairs_(PairCmp{order}), opts_(opts),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(opts.budget_seconds))) {}

  void add_generator(const MPoly& g) {
    MPoly h = normal_form(g, basis_).monic();
    if (h.is_zero()) return;
    const int sugar = h.degree();
    install(std::move(h), sugar);
  }

  std::vector<MPoly> run() {
    while (!pairs_.empty()) {
      check_budget();
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ++pairs_done_;
      const MPoly& f = basis_[p.i];
      const MPoly& g = basis_[p.j];
      MPoly s = f.mul_mono(mono_div(p.lcm, f.leading().m))
                    .sub_mul_term({mono_div(p.lcm, g.leading().m), Rat(1)}, g);
      MPoly h = normal_form(s, basis_).monic();
      if (!h.is_zero()) install(std::move(h), p.sugar);
    }
    return basis_;
  }

 private:
  // Adds h to the basis and refreshes the pair set, applying the coprime
  // criterion and the chain criterion (Gebauer-Moeller update) so that
  // provably redundant S-pairs are never queued.
  void install(MPoly h, int sugar) {
    const int t = static_cast<int>(basis_.size());
    const Monomial& lmh = h.leading().m;

    // Candidate pairs (i, t), pruned among themselves: drop a candidate
    // whose lcm is properly divided by another candidate's lcm; among equal
    // lcms keep one representative, unless some member of the class is a
    // coprime pair (then the whole class is redundant).
    std::vector<Monomial> tau(t);
    for (int i = 0; i < t; ++i) tau[i] = mono_lcm(basis_[i].leading().m, lmh);
    std::vector<bool> keep(t, true);
    for (int i = 0; i < t; ++i) {
      for (int j = 0; j < t && keep[i]; ++j) {
        if (j == i) continue;
        if (mono_divides(tau[j], tau[i]) && !mono_equal(tau[j], tau[i])) keep[i] = false;
      }
    }
    std::vector<bool> classed(t, false);
    for (int i = 0; i < t; ++i) {
      if (!keep[i] || classed[i]) continue;
      std::vector<int> cls;
      bool class_coprime = false;
      for (int j = i; j < t; ++j) {
        if (!keep[j] || !mono_equal(tau[j], tau[i])) continue;
        classed[j] = true;
        cls.push_back(j);
        if (coprime(basis_[j].leading().m, lmh)) class_coprime = true;
      }
      for (std::size_t k = 0; k < cls.size(); ++k)
        if (class_coprime || k > 0) keep[cls[k]] = false;
    }

    // Chain criterion on already-queued pairs: (i, j) is redundant once
    // lm(h) divides lcm(i, j) while neither new pair shares that lcm.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (mono_divides(lmh, it->lcm) && !mono_equal(tau[it->i], it->lcm) &&
          !mono_equal(tau[it->j], it->lcm))
        it = pairs_.erase(it);
      else
        ++it;
    }

    for (int i = 0; i < t; ++i) {
      if (!keep[i]) continue;
      int s = std::max(sugars_[i] + tau[i].deg - basis_[i].leading().m.deg,
                       sugar + tau[i].deg - lmh.deg);
      pairs_.insert(Pair{i, t, tau[i], s});
    }
    basis_.push_back(std::move(h));
    sugars_.push_back(sugar);
  }

  void check_budget() {
    if (opts_.pair_budget && pairs_done_ >= opts_.pair_budget)
      throw ResourceLimitError("Groebner S-pair budget exceeded (" +
                               std::to_string(opts_.pair_budget) + " pairs)");
    if (opts_.budget_seconds > 0 && std::chrono::steady_clock::now() > deadline_)
      throw ResourceLimitError("Groebner wall-clock budget exceeded (" +
                               std::to_string(opts_.budget_seconds) + " s)");
  }

  std::vector<MPoly> basis_;
  std::vector<int> sugars_;
  std::set<Pair, PairCmp> pairs_;
  GBOptions opts_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t pairs_done_ = 0;
};

// Minimalize (drop elements whose leading monomial another element's
// leading monomial divides), then reduce every element to normal form with
// respect to the others.  The result is the unique reduced basis.
std::vector<MPoly> interreduce(std::vector<MPoly> basis, MonomialOrder order) {
  std::sort(basis.begin(), basis.end(), [order](const MPoly& a, const MPoly& b) {
    return mono_cmp(a.leading().m, b.leading().m, order) < 0;
  });
  std::vector<MPoly> minimal;
  for (MPoly& g : basis) {
    bool redundant = false;
    for (const MPoly& kept : minimal)
      if (mono_divides(kept.leading().m, g.leading().m)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(g));
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<MPoly> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      MPoly r = normal_form(minimal[i], others).monic();
      if (r != minimal[i]) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [order](const MPoly& a, const MPoly& b) {
    return mono_cmp(a.leading().m, b.leading().m, order) < 0;
  });
  return minimal;
}

}  // namespace

GroebnerBasis groebner(const Ideal& ideal, const GBOptions& opts) {
  Buchberger engine(ideal.ring->order, opts);
  std::vector<MPoly> gens;
  for (const MPoly& g : ideal.gens)
    if (!g.is_zero()) gens.push_back(g);
  std::sort(gens.begin(), gens.end(), [&](const MPoly& a, const MPoly& b) {
    return mono_cmp(a.leading().m, b.leading().m, ideal.ring->order) < 0;
  });
  for (const MPoly& g : gens) engine.add_generator(g);
  std::vector<MPoly> basis = interreduce(engine.run(), ideal.ring->order);
  return GroebnerBasis{ideal, std::move(basis), true};
}

namespace {

// dim(ring/ideal) = nvars - (size of a minimum set of variables meeting the
// support of every leading monomial).  Small branch-and-bound search.
void min_hitting_set(const std::vector<std::vector<int>>& supports,
                     std::vector<bool>& hit, int chosen, int& best) {
  if (chosen >= best) return;
  std::size_t pick = supports.size();
  for (std::size_t s = 0; s < supports.size(); ++s) {
    bool covered = false;
    for (int v : supports[s])
      if (hit[v]) {
        covered = true;
        break;
      }
    if (!covered && (pick == supports.size() ||
                     supports[s].size() < supports[pick].size()))
      pick = s;
  }
  if (pick == supports.size()) {
    best = chosen;
    return;
  }
  for (int v : supports[pick]) {
    hit[v] = true;
    min_hitting_set(supports, hit, chosen + 1, best);
    hit[v] = false;
  }
}

}  // namespace

int ideal_dimension(const GroebnerBasis& gb) {
  const int nvars = gb.ideal.ring->nvars();
  if (gb.basis.empty()) return nvars;
  std::vector<std::vector<int>> supports;
  for (const MPoly& g : gb.basis) {
    const Monomial& lm = g.leading().m;
    if (mono_is_one(lm)) return -1;  // unit ideal
    std::vector<int> s;
    for (int v = 0; v < nvars; ++v)
      if (lm.e[v] > 0) s.push_back(v);
    supports.push_back(std::move(s));
  }
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  int best = nvars;
  std::vector<bool> hit(nvars, false);
  min_hitting_set(supports, hit, 0, best);
  return nvars - best;
}

namespace {

void count_standard(const std::vector<Monomial>& lms, std::vector<int>& exps,
                    const std::vector<int>& caps, std::size_t var, std::uint64_t& count) {
  const std::size_t nvars = caps.size();
  // Prune as soon as the monomials fixed so far are divisible by a leading
  // monomial supported entirely on the assigned variables.
  for (const Monomial& lm : lms) {
    bool applicable = true, divides = true;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (v >= var && lm.e[v] > 0) {
        applicable = false;
        break;
      }
      if (v < var && lm.e[v] > exps[v]) divides = false;
    }
    if (applicable && divides) return;
  }
  if (var == nvars) {
    ++count;
    return;
  }
  for (int k = 0; k < caps[var]; ++k) {
    exps[var] = k;
    count_standard(lms, exps, caps, var + 1, count);
  }
  exps[var] = 0;
}

}  // namespace

std::optional<std::uint64_t> vector_space_dimension(const GroebnerBasis& gb) {
  const int nvars = gb.ideal.ring->nvars();
  std::vector<Monomial> lms;
  for (const MPoly& g : gb.basis) {
    if (mono_is_one(g.leading().m)) return 0;  // unit ideal: zero quotient
    lms.push_back(g.leading().m);
  }
  // The quotient has finite dimension iff every variable appears as a pure
  // power among the leading monomials; that power caps the search per axis.
  std::vector<int> caps(nvars, -1);
  for (const Monomial& lm : lms) {
    int support = -1;
    bool pure = true;
    for (int v = 0; v < nvars; ++v)
      if (lm.e[v] > 0) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = v;
      }
    if (pure && support >= 0)
      caps[support] = caps[support] < 0 ? lm.e[support]
                                        : std::min(caps[support], lm.e[support]);
  }
  for (int v = 0; v < nvars; ++v)
    if (caps[v] < 0) return std::nullopt;
  std::uint64_t count = 0;
  std::vector<int> exps(nvars, 0);
  count_standard(lms, exps, caps, 0, count);
  return count;
}

}  // namespace frobkit
