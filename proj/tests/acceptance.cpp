// Acceptance gate: one criterion per section, one pass/fail line each.
//
//   1. the certified claim suite at n = 2 through the CLI
//   2. identity/diagonal/trace biprojections for n = 1..5
//   3. the three one-parameter biprojection families, numeric and symbolic
//   4. splitting and embedding verification for the standard examples
//   5. forward construction from subalgebra spans, with rejections
//   6. exchange-relation idempotency certificate via normal forms
//   7. diagram-calculus axiom corpus on M_2 and M_3
//   8. six randomized property suites, >= 200 cases each
//   9. resource-gated n = 3 runs plus exact substitution checks
//
// Exit status 0 iff every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "claims.hpp"
#include "dsl.hpp"
#include "endo.hpp"
#include "eqs.hpp"
#include "families.hpp"
#include "frobalg.hpp"
#include "groebner.hpp"
#include "json.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "subalg.hpp"
#include "tensor.hpp"

using namespace frobkit;
using Json = nlohmann::ordered_json;

namespace {

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data_file(const std::string& rel) {
  return std::string(FROBKIT_TEST_DATA_DIR) + "/" + rel;
}

std::mt19937 rng(7791);

Rat small_rat() {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rat(num(rng)) / den(rng);
}

Endo random_endo(int n) {
  Endo t = zero_endo(n);
  for (Rat& x : t.a) x = small_rat();
  return t;
}

Endo random_selfdual(int n) {
  Endo t = random_endo(n);
  Endo d = dual(t);
  for (std::size_t i = 0; i < t.a.size(); ++i) t.a[i] += d.a[i];
  return t;
}

Endo random_idempotent(int n, int r) {
  const int d = n * n;
  for (;;) {
    RatMat a(d, r), b(r, d);
    for (Rat& x : a.a) x = small_rat();
    for (Rat& x : b.a) x = small_rat();
    auto inv = mat_inverse(mat_mul(b, a));
    if (!inv) continue;
    return endo_from_matrix(n, mat_mul(mat_mul(a, *inv), b));
  }
}

Rat coeff_trace(const Endo& t) {
  Rat sum = 0;
  const RatMat m = matrix_of(t);
  for (int i = 0; i < m.rows; ++i) sum += m.at(i, i);
  return sum;
}

bool holds(const Endo& t, Predicate p) { return check_predicate(t, p).holds; }

/// The named biprojection family samples used by criteria 3 and 4.
std::vector<std::pair<std::string, Endo>> family_samples() {
  std::vector<std::pair<std::string, Endo>> out;
  for (const Rat& s :
       std::vector<Rat>{Rat(0), Rat(1), Rat(3), Rat(Rat(-2) / 5)})
    out.emplace_back("bipro3-1(s=" + rat_str(s) + ")",
                     family_endo("bipro3-1", 2, {s}));
  for (const Rat& u : std::vector<Rat>{Rat(2), Rat(-1), Rat(Rat(1) / 3)})
    out.emplace_back("bipro3-2(u=" + rat_str(u) + ")",
                     family_endo("bipro3-2", 2, {u}));
  for (auto [k, t] : std::vector<std::pair<Rat, Rat>>{
           {Rat(2), Rat(1)}, {Rat(0), Rat(1)}, {Rat(Rat(3) / 2), Rat(-2)}})
    out.emplace_back(
        "bipro3-3(k=" + rat_str(k) + ",t=" + rat_str(t) + ")",
        family_endo("bipro3-3", 2, {k, t}));
  return out;
}

// --- criterion bodies -----------------------------------------------------

void criterion_claim_suite(Criterion& c) {
  const std::string out_path = "/tmp/frobkit_acceptance_claims.json";
  const std::string cmd = std::string(FROBKIT_CLI_PATH) +
                          " verify-claims --n 2 --claim all --json --out " +
                          out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  c.require(status == 0, "CLI claim suite exited with status " +
                             std::to_string(status));
  if (status != 0) return;
  Json reports;
  try {
    reports = Json::parse(slurp(out_path));
  } catch (const std::exception& e) {
    c.require(false, std::string("claim output is not JSON: ") + e.what());
    return;
  }
  std::remove(out_path.c_str());
  c.require(reports.is_array() && reports.size() == 4,
            "expected four claim reports at n = 2");
  std::map<std::string, Json> by_name;
  for (const Json& r : reports) by_name[r.value("claim", "?")] = r;
  for (const auto& [name, r] : by_name)
    c.require(r.value("status", "?") == "pass", name + " did not pass");
  c.require(by_name["bipro-implies-er"]["evidence"]["nonzero_normal_forms"] ==
                0,
            "exchange relations left nonzero normal forms");
  c.require(by_name["dimensions"]["evidence"]["dimensions"] == Json({2, 3}),
            "Krull dimensions differ from [2, 3]");
  const Json& spec = by_name["lambda-spectrum"]["evidence"];
  c.require(spec["cubic_membership"] == true,
            "(x - 1/2)(x - 1)(x - 2) not in the ideal");
  c.require(spec["fiber_vector_space_dimensions"]["1/2"] == 1 &&
                spec["fiber_vector_space_dimensions"]["2"] == 1,
            "fiber dimensions at 1/2 and 2 differ from 1");
  c.require(spec["lambda_1_krull_dimension"] == 2,
            "Krull dimension of the lambda = 1 fiber differs from 2");
}

void criterion_examples(Criterion& c) {
  for (int n = 1; n <= 5; ++n) {
    struct Row {
      const char* name;
      Endo t;
      Rat lambda;
    };
    const std::vector<Row> rows = {{"identity", identity_endo(n), Rat(n)},
                                   {"diagonal", diagonal_endo(n), Rat(1)},
                                   {"trace", trace_endo(n), Rat(1) / n}};
    for (const Row& row : rows) {
      const std::string tag =
          std::string(row.name) + " on M_" + std::to_string(n);
      for (Predicate p : {Predicate::kSelfdual, Predicate::kUnital,
                          Predicate::kIdempotent, Predicate::kEr})
        c.require(holds(row.t, p), tag + " fails " + predicate_name(p));
      auto conv = check_predicate(row.t, Predicate::kConvStable);
      c.require(conv.holds, tag + " fails conv_stable");
      c.require(conv.lambda && *conv.lambda == row.lambda,
                tag + " has the wrong convolution scalar");
    }
  }
}

void criterion_families(Criterion& c) {
  for (const auto& [name, t] : family_samples()) {
    auto rep = check_predicate(t, Predicate::kBiprojection);
    c.require(rep.holds, name + " is not a biprojection");
    c.require(rep.lambda && *rep.lambda == Rat(1),
              name + " has convolution scalar != 1");
    c.require(holds(t, Predicate::kEr),
              name + " fails the exchange relations");
  }
  // The first family as a single polynomial identity over Q[s].
  PolyEndo sym = family_bipro3_1_poly();
  RingPtr ring;
  for (const MPoly& p : sym.a)
    if (p.ring()) {
      ring = p.ring();
      break;
    }
  c.require(static_cast<bool>(ring), "symbolic family has no coefficient ring");
  if (!ring) return;
  const MPoly one = MPoly::constant(ring, Rat(1));
  auto rep = check_predicate(sym, Predicate::kBiprojection,
                             std::optional<MPoly>(one));
  c.require(rep.holds, "bipro3-1 fails as a polynomial identity over Q[s]");
  c.require(check_predicate(sym, Predicate::kEr).holds,
            "bipro3-1 exchange relations fail over Q[s]");
}

void criterion_splitting(Criterion& c) {
  std::vector<std::pair<std::string, Endo>> cases = {
      {"diagonal", diagonal_endo(2)},
      {"trace", trace_endo(2)},
      {"identity", identity_endo(2)},
  };
  for (auto& sample : family_samples()) cases.push_back(sample);
  for (const auto& [name, b] : cases) {
    try {
      SplitData split = split_idempotent(b);
      InducedAlgebra induced = induce_structure(split);
      c.require(induced.issues.empty(),
                name + ": induced structure reported issues");
      EmbeddingReport emb = verify_embedding(split, induced);
      for (const EmbeddingCheck& chk : emb.checks)
        c.require(chk.holds, name + ": embedding check '" + chk.name +
                                 "' fails: " + chk.detail);
    } catch (const std::exception& e) {
      c.require(false, name + ": " + e.what());
    }
  }
}

void criterion_forward(Criterion& c) {
  auto col = [](std::vector<int> entries) {
    RatMat m(4, 1);
    for (int i = 0; i < 4; ++i) m.at(i, 0) = entries[i];
    return m;
  };
  auto hcat = [](const std::vector<RatMat>& cols) {
    RatMat m(cols[0].rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols; ++j)
      for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j].at(i, 0);
    return m;
  };
  const RatMat scalars = col({1, 0, 0, 1});                      // Q . I
  const RatMat diagonal = hcat({col({1, 0, 0, 0}), col({0, 0, 0, 1})});
  // Conjugate of the diagonal pair by [[1, 1], [0, 1]].
  const RatMat conjugate = hcat({col({1, -1, 0, 0}), col({0, 1, 0, 1})});
  const RatMat full = hcat({col({1, 0, 0, 0}), col({0, 1, 0, 0}),
                            col({0, 0, 1, 0}), col({0, 0, 0, 1})});
  const std::vector<std::pair<std::string, RatMat>> accepted = {
      {"scalars", scalars},
      {"diagonal", diagonal},
      {"conjugated diagonal", conjugate},
      {"full M_2", full}};
  for (const auto& [name, span] : accepted) {
    try {
      Endo b = subalgebra_to_idempotent(span, 2);
      for (Predicate p : {Predicate::kSelfdual, Predicate::kUnital,
                          Predicate::kEr, Predicate::kIdempotent})
        c.require(holds(b, p),
                  name + ": induced idempotent fails " + predicate_name(p));
    } catch (const std::exception& e) {
      c.require(false, name + ": " + e.what());
    }
  }

  const RatMat upper = hcat({col({1, 0, 0, 0}), col({0, 1, 0, 0}),
                             col({0, 0, 0, 1})});
  const RatMat nilpotent_line = hcat({col({1, 0, 0, 1}), col({0, 1, 0, 0})});
  for (const auto& [name, span] :
       std::vector<std::pair<std::string, RatMat>>{
           {"upper-triangular span", upper},
           {"span{I, E12}", nilpotent_line}}) {
    try {
      subalgebra_to_idempotent(span, 2);
      c.require(false, name + " was not rejected");
    } catch (const SubalgebraRejection& e) {
      c.require(e.kind() == "degenerate-form",
                name + " rejected with kind '" + e.kind() + "'");
      c.require(std::string(e.what()).find(
                    "degenerate with respect to the bilinear form") !=
                    std::string::npos,
                name + " rejection does not name the degenerate form");
    } catch (const std::exception& e) {
      c.require(false, name + ": unexpected error: " + e.what());
    }
  }
}

void criterion_certificate(Criterion& c) {
  EquationSet es = make_eqs(2);
  Ideal k{es.ring, {}};
  k.gens.insert(k.gens.end(), es.eqs2.begin(), es.eqs2.end());
  k.gens.insert(k.gens.end(), es.eqs5.begin(), es.eqs5.end());
  GroebnerBasis gb = groebner(k);
  int nonzero = 0;
  for (const MPoly& p : es.eqs3)
    if (!normal_form(p, gb).is_zero()) ++nonzero;
  c.require(nonzero == 0,
            std::to_string(nonzero) +
                " idempotency polynomials have nonzero normal form "
                "modulo eqs2 + eqs5");
}

void criterion_corpus(Criterion& c) {
  const std::string axioms = slurp(data_file("axioms.frob"));
  const std::string er = slurp(data_file("er_diagonal.frob"));
  c.require(!axioms.empty() && !er.empty(), "corpus files missing");
  for (int n = 2; n <= 3; ++n) {
    const std::string model = "M_" + std::to_string(n);
    FrobModel mdl = matrix_model(n);
    auto results = run_corpus(axioms, mdl);
    c.require(results.size() == 11, model + ": expected 11 axiom lines");
    for (const auto& r : results)
      c.require(r.report.equal, model + " axiom line " +
                                    std::to_string(r.line) +
                                    " fails: " + r.report.detail);
    std::map<std::string, RatMat> bind{{"b", matrix_of(diagonal_endo(n))}};
    for (const auto& r : run_corpus(er, mdl, bind))
      c.require(r.report.equal, model + " exchange-relation line " +
                                    std::to_string(r.line) +
                                    " fails: " + r.report.detail);
  }
}

void criterion_properties(Criterion& c) {
  int cases = 0;

  // Suite 1: dual involution.
  for (int n = 1; n <= 4; ++n)
    for (int rep = 0; rep < 50; ++rep, ++cases) {
      Endo t = random_endo(n);
      c.require(dual(dual(t)) == t, "dual involution fails");
    }
  c.require(cases >= 200, "dual involution ran under 200 cases");

  // Suite 2: Fourier left-inverse.
  cases = 0;
  for (int n = 1; n <= 3; ++n)
    for (int rep = 0; rep < 67; ++rep, ++cases) {
      Endo t = random_endo(n);
      c.require(fourier_inv(fourier(t)) == t, "fourier_inv . fourier != id");
    }
  c.require(cases >= 200, "Fourier suite ran under 200 cases");

  // Suite 3: convolution associativity.
  cases = 0;
  auto assoc = [&](int n) {
    Endo r = random_endo(n), s = random_endo(n), t = random_endo(n);
    c.require(convolve(convolve(r, s), t) == convolve(r, convolve(s, t)),
              "convolution associativity fails on M_" + std::to_string(n));
    ++cases;
  };
  for (int rep = 0; rep < 20; ++rep) assoc(1);
  for (int rep = 0; rep < 120; ++rep) assoc(2);
  for (int rep = 0; rep < 60; ++rep) assoc(3);
  c.require(cases >= 200, "associativity suite ran under 200 cases");

  // Suite 4: the duality diagram equals the coefficient dual.
  cases = 0;
  MorphExpr dual_diagram =
      parse_expr("(id ox ev) . (id ox #T ox id) . (coev ox id)");
  typecheck_expr(dual_diagram);
  auto diagram_case = [&](int n) {
    FrobModel mdl = matrix_model(n);
    Endo t = random_endo(n);
    std::map<std::string, RatMat> bind{{"T", matrix_of(t)}};
    c.require(evaluate_expr(dual_diagram, mdl, bind) == endo_tensor(dual(t)),
              "duality diagram disagrees with the coefficient dual");
    ++cases;
  };
  for (int rep = 0; rep < 195; ++rep) diagram_case(2);
  for (int rep = 0; rep < 5; ++rep) diagram_case(3);
  c.require(cases >= 200, "duality-diagram suite ran under 200 cases");

  // Suite 5: selfduality = trace test.
  cases = 0;
  auto trace_test = [](const Endo& t) {
    const int n = t.n;
    auto image = [&](int i, int j) {
      RatMat m(n, n);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) m.at(k, l) = t.at(i, j, k, l);
      return m;
    };
    auto tr_mul = [&](const RatMat& x, const RatMat& y) {
      RatMat p = mat_mul(x, y);
      Rat sum = 0;
      for (int i = 0; i < n; ++i) sum += p.at(i, i);
      return sum;
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            RatMat x(n, n), y(n, n);
            x.at(i, j) = 1;
            y.at(k, l) = 1;
            if (tr_mul(x, image(k, l)) != tr_mul(image(i, j), y)) return false;
          }
    return true;
  };
  for (int n = 2; n <= 3; ++n)
    for (int rep = 0; rep < 50; ++rep) {
      Endo plain = random_endo(n);
      c.require(holds(plain, Predicate::kSelfdual) == trace_test(plain),
                "selfdual predicate disagrees with the trace test");
      ++cases;
      Endo sym = random_selfdual(n);
      c.require(holds(sym, Predicate::kSelfdual) && trace_test(sym),
                "symmetrized endomorphism is not selfdual");
      ++cases;
    }
  c.require(cases >= 200, "selfduality suite ran under 200 cases");

  // Suite 6: rank of the split = trace of the idempotent.
  cases = 0;
  std::uniform_int_distribution<int> rank2(1, 4), rank3(1, 9);
  for (int rep = 0; rep < 100; ++rep, ++cases) {
    const int r = rank2(rng);
    Endo b = random_idempotent(2, r);
    SplitData split = split_idempotent(b);
    c.require(split.rank == r && coeff_trace(b) == Rat(r),
              "rank of split differs from the trace on M_2");
  }
  for (int rep = 0; rep < 100; ++rep, ++cases) {
    const int r = rank3(rng);
    Endo b = random_idempotent(3, r);
    SplitData split = split_idempotent(b);
    c.require(split.rank == r && coeff_trace(b) == Rat(r),
              "rank of split differs from the trace on M_3");
  }
  c.require(cases >= 200, "rank suite ran under 200 cases");
}

void criterion_gated(Criterion& c) {
  ClaimRunner runner(3, ClaimBudget{8});
  for (ClaimReport rep : runner.run_all()) {
    c.require(rep.status != ClaimStatus::kFail,
              "n = 3 claim '" + rep.claim + "' reported fail (gated runs may "
              "pass or hit the resource limit, never fail)");
  }
  // Instance-level substitution checks stay exact at n = 3.
  const EquationSet& es = runner.equations();
  auto vanish = [&](const std::vector<MPoly>& polys,
                    const std::vector<Rat>& point) {
    for (const MPoly& p : polys)
      if (!rat_is_zero(p.eval(point))) return false;
    return true;
  };
  struct Row {
    const char* name;
    Endo t;
    Rat lambda;
  };
  for (const Row& row :
       {Row{"diagonal", diagonal_endo(3), Rat(1)},
        Row{"trace", trace_endo(3), Rat(1) / 3},
        Row{"identity", identity_endo(3), Rat(3)}}) {
    const std::vector<Rat> point = equation_point(row.t.a, row.lambda);
    c.require(vanish(es.eqs1, point) && vanish(es.eqs2, point) &&
                  vanish(es.eqs3, point) && vanish(es.eqs4, point),
              std::string(row.name) +
                  " on M_3 does not satisfy the coefficient systems");
    c.require(vanish(es.eqs5, point),
              std::string(row.name) +
                  " on M_3 does not satisfy the exchange-relation system");
  }
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    double limit_seconds;
    void (*body)(Criterion&);
  };
  const std::vector<Entry> entries = {
      {1, "certified claim suite at n = 2 (verify-claims --claim all)", 300,
       criterion_claim_suite},
      {2, "identity/diagonal/trace biprojections for n = 1..5", 10,
       criterion_examples},
      {3, "one-parameter families, numeric samples and Q[s] identity", 10,
       criterion_families},
      {4, "split + induce + embedding verification on M_2", 10,
       criterion_splitting},
      {5, "forward construction from subalgebra spans", 0, criterion_forward},
      {6, "idempotency certificate modulo unitality + exchange relations", 300,
       criterion_certificate},
      {7, "axiom corpus on M_2 and M_3", 30, criterion_corpus},
      {8, "randomized property suites (6 x >= 200 cases)", 0,
       criterion_properties},
      {9, "resource-gated n = 3 claims + exact substitution checks", 0,
       criterion_gated},
  };

  int failures = 0;
  for (const Entry& entry : entries) {
    Criterion c{entry.id, entry.title};
    const auto start = std::chrono::steady_clock::now();
    entry.body(c);
    const double elapsed = seconds_since(start);
    if (entry.limit_seconds > 0 && elapsed > entry.limit_seconds) {
      c.pass = false;
      c.notes.push_back("runtime " + std::to_string(elapsed) +
                        "s exceeds the " +
                        std::to_string(entry.limit_seconds) + "s target");
    }
    std::printf("criterion %d: %s - %s (%.2fs)\n", c.id,
                c.pass ? "PASS" : "FAIL", c.title.c_str(), elapsed);
    const std::size_t shown = std::min<std::size_t>(c.notes.size(), 20);
    for (std::size_t i = 0; i < shown; ++i)
      std::printf("    %s\n", c.notes[i].c_str());
    if (c.notes.size() > shown)
      std::printf("    ... and %zu more\n", c.notes.size() - shown);
    if (!c.pass) ++failures;
  }
  std::printf("%d/9 criteria pass\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
