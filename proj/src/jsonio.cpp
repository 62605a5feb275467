#include "jsonio.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace frobkit {

namespace {

std::string type_name(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return "null";
    case Json::value_t::object: return "an object";
    case Json::value_t::array: return "an array";
    case Json::value_t::string: return "a string";
    case Json::value_t::boolean: return "a boolean";
    case Json::value_t::discarded: return "a discarded value";
    default: return "a number";
  }
}

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw JsonFormatError(where + ": " + msg);
}

const Json& expect_object(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object, got " + type_name(j));
  return j;
}

const Json& expect_array(const Json& j, const std::string& where, int size = -1) {
  if (!j.is_array()) fail(where, "expected an array, got " + type_name(j));
  if (size >= 0 && static_cast<int>(j.size()) != size)
    fail(where, "expected " + std::to_string(size) + " entries, got " +
                    std::to_string(j.size()));
  return j;
}

std::string expect_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string, got " + type_name(j));
  return j.get<std::string>();
}

int expect_int(const Json& j, const std::string& where, int lo, int hi) {
  if (!j.is_number_integer())
    fail(where, "expected an integer, got " + type_name(j));
  const auto v = j.get<long long>();
  if (v < lo || v > hi)
    fail(where, "value " + std::to_string(v) + " outside the supported range [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

const Json& expect_key(const Json& j, const char* key, const std::string& where) {
  expect_object(j, where);
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string at_index(const std::string& where, int i) {
  return where + "[" + std::to_string(i) + "]";
}

// Largest matrix size an endomorphism file may declare; n^4 coefficient
// entries are materialized, so this caps allocations on hostile input.
constexpr int kMaxN = 32;

}  // namespace

// --- Rationals --------------------------------------------------------------

Rat rat_from_json(const Json& j, const std::string& where) {
  const std::string s = expect_string(j, where);
  auto r = rat_parse(s);
  if (!r) fail(where, "expected a rational \"p\" or \"p/q\", got \"" + s + "\"");
  return *r;
}

// --- Matrices and tensors ---------------------------------------------------

Json mat_to_json(const RatMat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(rat_str(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMat mat_from_json(const Json& j, const std::string& where) {
  expect_array(j, where);
  const int rows = static_cast<int>(j.size());
  int cols = -1;
  RatMat m;
  for (int r = 0; r < rows; ++r) {
    const std::string rw = at_index(where, r);
    expect_array(j[r], rw);
    if (cols < 0) {
      cols = static_cast<int>(j[r].size());
      m = RatMat(rows, cols);
    } else if (static_cast<int>(j[r].size()) != cols) {
      fail(rw, "expected " + std::to_string(cols) + " entries to match row 0, got " +
                   std::to_string(j[r].size()));
    }
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = rat_from_json(j[r][c], at_index(rw, c));
  }
  if (cols < 0) m = RatMat(0, 0);
  return m;
}

Json tensor_to_json(const TensorMap& t) {
  Json out = Json::object();
  out["d"] = t.d;
  out["in_arity"] = t.p;
  out["out_arity"] = t.q;
  out["matrix"] = mat_to_json(t.mat);
  return out;
}

// --- Endomorphisms ----------------------------------------------------------

namespace {

template <class S, class EntryFn>
Json endo_table(const EndoT<S>& t, EntryFn entry) {
  Json a = Json::array();
  for (int i = 0; i < t.n; ++i) {
    Json ai = Json::array();
    for (int j = 0; j < t.n; ++j) {
      Json aij = Json::array();
      for (int k = 0; k < t.n; ++k) {
        Json aijk = Json::array();
        for (int l = 0; l < t.n; ++l) aijk.push_back(entry(t.at(i, j, k, l)));
        aij.push_back(std::move(aijk));
      }
      ai.push_back(std::move(aij));
    }
    a.push_back(std::move(ai));
  }
  return a;
}

}  // namespace

Json endo_to_json(const Endo& t) {
  Json out = Json::object();
  out["model"] = "matrix";
  out["n"] = t.n;
  out["scalars"] = "rational";
  out["A"] = endo_table(t, [](const Rat& r) { return Json(rat_str(r)); });
  return out;
}

Json endo_to_json(const PolyEndo& t) {
  RingPtr ring;
  for (const auto& entry : t.a)
    if (entry.ring()) {
      ring = entry.ring();
      break;
    }
  if (!ring)
    throw std::invalid_argument("polynomial endomorphism carries no ring");
  Json out = Json::object();
  out["model"] = "matrix";
  out["n"] = t.n;
  out["scalars"] = "poly";
  out["variables"] = ring->vars;
  out["A"] = endo_table(t, [](const MPoly& p) { return poly_to_json(p); });
  return out;
}

namespace {

template <class S, class EntryFn>
EndoT<S> endo_fill(int n, const Json& a, EntryFn entry) {
  const std::size_t count = static_cast<std::size_t>(n) * n * n * n;
  EndoT<S> t{n, std::vector<S>(count)};  // every slot is assigned below
  expect_array(a, "$.A", n);
  for (int i = 0; i < n; ++i) {
    const std::string wi = at_index("$.A", i);
    expect_array(a[i], wi, n);
    for (int j = 0; j < n; ++j) {
      const std::string wj = at_index(wi, j);
      expect_array(a[i][j], wj, n);
      for (int k = 0; k < n; ++k) {
        const std::string wk = at_index(wj, k);
        expect_array(a[i][j][k], wk, n);
        for (int l = 0; l < n; ++l)
          t.at(i, j, k, l) = entry(a[i][j][k][l], at_index(wk, l));
      }
    }
  }
  return t;
}

}  // namespace

AnyEndo endo_from_json(const Json& j) {
  expect_object(j, "$");
  const std::string model = expect_string(expect_key(j, "model", "$"), "$.model");
  if (model != "matrix")
    fail("$.model", "expected \"matrix\", got \"" + model + "\"");
  const int n = expect_int(expect_key(j, "n", "$"), "$.n", 1, kMaxN);
  const std::string scalars =
      expect_string(expect_key(j, "scalars", "$"), "$.scalars");
  const Json& a = expect_key(j, "A", "$");
  if (scalars == "rational")
    return endo_fill<Rat>(n, a, [](const Json& e, const std::string& w) {
      return rat_from_json(e, w);
    });
  if (scalars == "poly") {
    const Json& vars_j = expect_key(j, "variables", "$");
    expect_array(vars_j, "$.variables");
    std::vector<std::string> vars;
    for (int i = 0; i < static_cast<int>(vars_j.size()); ++i)
      vars.push_back(expect_string(vars_j[i], at_index("$.variables", i)));
    RingPtr ring = make_ring(std::move(vars));
    return endo_fill<MPoly>(n, a, [&ring](const Json& e, const std::string& w) {
      return poly_from_json(ring, e, w);
    });
  }
  fail("$.scalars", "expected \"rational\" or \"poly\", got \"" + scalars + "\"");
}

Endo rational_endo_from_json(const Json& j) {
  AnyEndo any = endo_from_json(j);
  if (auto* e = std::get_if<Endo>(&any)) return std::move(*e);
  fail("$.scalars", "polynomial scalars are not accepted here; "
                    "bind the parameters to rationals first");
}

// --- Polynomials and ideals -------------------------------------------------

Json poly_to_json(const MPoly& p) {
  Json terms = Json::array();
  for (const Term& t : p.terms()) {
    Json term = Json::object();
    term["coeff"] = rat_str(t.c);
    term["exps"] = t.m.e;
    terms.push_back(std::move(term));
  }
  return terms;
}

MPoly poly_from_json(const RingPtr& ring, const Json& j, const std::string& where) {
  expect_array(j, where);
  const int nvars = ring->nvars();
  std::vector<Term> terms;
  terms.reserve(j.size());
  for (int t = 0; t < static_cast<int>(j.size()); ++t) {
    const std::string wt = at_index(where, t);
    expect_object(j[t], wt);
    Rat c = rat_from_json(expect_key(j[t], "coeff", wt), wt + ".coeff");
    const Json& exps_j = expect_key(j[t], "exps", wt);
    expect_array(exps_j, wt + ".exps", nvars);
    Monomial m = Monomial::one(nvars);
    for (int v = 0; v < nvars; ++v) {
      m.e[v] = expect_int(exps_j[v], at_index(wt + ".exps", v), 0, 1 << 20);
      m.deg += m.e[v];
    }
    terms.push_back(Term{std::move(m), std::move(c)});
  }
  return MPoly::from_terms(ring, std::move(terms));
}

Json ideal_to_json(const Ideal& ideal) {
  Json out = Json::object();
  out["variables"] = ideal.ring->vars;
  out["order"] =
      ideal.ring->order == MonomialOrder::kLex ? "lex" : "degrevlex";
  Json gens = Json::array();
  for (const MPoly& g : ideal.gens) gens.push_back(poly_to_json(g));
  out["generators"] = std::move(gens);
  return out;
}

Ideal ideal_from_json(const Json& j) {
  expect_object(j, "$");
  const Json& vars_j = expect_key(j, "variables", "$");
  expect_array(vars_j, "$.variables");
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (int i = 0; i < static_cast<int>(vars_j.size()); ++i) {
    std::string name = expect_string(vars_j[i], at_index("$.variables", i));
    if (name.empty()) fail(at_index("$.variables", i), "variable name is empty");
    if (!seen.insert(name).second)
      fail(at_index("$.variables", i), "duplicate variable \"" + name + "\"");
    vars.push_back(std::move(name));
  }
  MonomialOrder order = MonomialOrder::kDegrevlex;
  if (auto it = j.find("order"); it != j.end()) {
    const std::string o = expect_string(*it, "$.order");
    if (o == "lex")
      order = MonomialOrder::kLex;
    else if (o != "degrevlex")
      fail("$.order", "expected \"degrevlex\" or \"lex\", got \"" + o + "\"");
  }
  RingPtr ring = make_ring(std::move(vars), order);
  const Json& gens_j = expect_key(j, "generators", "$");
  expect_array(gens_j, "$.generators");
  std::vector<MPoly> gens;
  for (int g = 0; g < static_cast<int>(gens_j.size()); ++g)
    gens.push_back(poly_from_json(ring, gens_j[g], at_index("$.generators", g)));
  return make_ideal(std::move(ring), std::move(gens));
}

Json groebner_to_json(const GroebnerBasis& gb) {
  Json out = ideal_to_json(gb.ideal);
  Json basis = Json::array();
  for (const MPoly& p : gb.basis) basis.push_back(poly_to_json(p));
  out["basis"] = std::move(basis);
  out["reduced"] = gb.reduced;
  return out;
}

// --- Spans ------------------------------------------------------------------

Json span_to_json(const SpanFile& s) {
  Json out = Json::object();
  out["n"] = s.n;
  Json span = Json::array();
  for (int c = 0; c < s.span.cols; ++c) {
    Json vec = Json::array();
    for (int r = 0; r < s.span.rows; ++r) vec.push_back(rat_str(s.span.at(r, c)));
    span.push_back(std::move(vec));
  }
  out["span"] = std::move(span);
  return out;
}

SpanFile span_from_json(const Json& j) {
  expect_object(j, "$");
  SpanFile s;
  s.n = expect_int(expect_key(j, "n", "$"), "$.n", 1, kMaxN);
  const int d = s.n * s.n;
  const Json& span_j = expect_key(j, "span", "$");
  expect_array(span_j, "$.span");
  if (span_j.empty()) fail("$.span", "expected at least one basis element");
  const int r = static_cast<int>(span_j.size());
  s.span = RatMat(d, r);
  for (int c = 0; c < r; ++c) {
    const std::string wc = at_index("$.span", c);
    expect_array(span_j[c], wc, d);
    for (int row = 0; row < d; ++row)
      s.span.at(row, c) = rat_from_json(span_j[c][row], at_index(wc, row));
  }
  return s;
}

// --- Reports ----------------------------------------------------------------

namespace {

std::string hyphenated(std::string s) {
  for (char& c : s)
    if (c == '_') c = '-';
  return s;
}

template <class S>
Json report_json(const PredicateReport<S>& r) {
  Json out = Json::object();
  out["predicate"] = hyphenated(predicate_name(r.predicate));
  out["holds"] = r.holds;
  out["lambda"] = r.lambda ? Json(ScalarOps<S>::str(*r.lambda)) : Json(nullptr);
  out["witness"] = r.witness ? witness_to_json(*r.witness) : Json(nullptr);
  out["note"] = r.note;
  Json parts = Json::array();
  for (const auto& p : r.parts) parts.push_back(report_json(p));
  out["parts"] = std::move(parts);
  return out;
}

}  // namespace

Json witness_to_json(const Witness& w) {
  Json out = Json::object();
  out["kind"] = w.kind;
  out["indices"] = w.indices;
  out["detail"] = w.detail;
  return out;
}

Json report_to_json(const PredicateReport<Rat>& r) { return report_json(r); }
Json report_to_json(const PredicateReport<MPoly>& r) { return report_json(r); }

Json claim_report_to_json(const ClaimReport& r) {
  Json out = Json::object();
  out["claim"] = r.claim;
  out["status"] = claim_status_name(r.status);
  out["evidence"] = r.evidence;
  out["seconds"] = r.seconds;
  return out;
}

Json embedding_report_to_json(const EmbeddingReport& r) {
  Json out = Json::object();
  out["all_pass"] = r.all_pass();
  Json checks = Json::array();
  for (const EmbeddingCheck& c : r.checks) {
    Json cj = Json::object();
    cj["name"] = c.name;
    cj["holds"] = c.holds;
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  out["checks"] = std::move(checks);
  return out;
}

Json split_bundle_to_json(const SplitData& split, const InducedAlgebra& induced,
                          const EmbeddingReport& embedding) {
  const FrobAlgebra& y = induced.Y;
  const int r = y.d;
  Json out = Json::object();
  out["n"] = split.b.n;
  out["rank"] = split.rank;
  out["u"] = mat_to_json(split.u);
  out["v"] = mat_to_json(split.v);

  Json sc = Json::array();
  for (int i = 0; i < r; ++i) {
    Json sci = Json::array();
    for (int jj = 0; jj < r; ++jj) {
      Json scij = Json::array();
      for (int k = 0; k < r; ++k) scij.push_back(rat_str(y.cc(i, jj, k)));
      sci.push_back(std::move(scij));
    }
    sc.push_back(std::move(sci));
  }
  out["structure_constants"] = std::move(sc);

  Json unit = Json::array();
  for (const Rat& x : y.unit) unit.push_back(rat_str(x));
  out["unit"] = std::move(unit);
  Json counit = Json::array();
  for (const Rat& x : y.counit) counit.push_back(rat_str(x));
  out["counit"] = std::move(counit);

  Json comul = Json::array();
  for (int i = 0; i < r; ++i) {
    Json ci = Json::array();
    for (int p = 0; p < r; ++p) {
      Json cip = Json::array();
      for (int q = 0; q < r; ++q) cip.push_back(rat_str(y.dl(i, p, q)));
      ci.push_back(std::move(cip));
    }
    comul.push_back(std::move(ci));
  }
  out["comultiplication"] = std::move(comul);

  Json issues = Json::array();
  for (const FrobCheckIssue& issue : induced.issues) {
    Json ij = Json::object();
    ij["axiom"] = issue.axiom;
    ij["message"] = issue.message;
    issues.push_back(std::move(ij));
  }
  out["issues"] = std::move(issues);
  out["embedding"] = embedding_report_to_json(embedding);
  return out;
}

// --- Files ------------------------------------------------------------------

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw JsonFormatError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    // e.what() pins the byte offset and context, e.g. "parse error at
    // line 3, column 7: ...".
    throw JsonFormatError(path + ": " + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw JsonFormatError(path + ": cannot open file for writing");
  out << dump_json(j);
  if (!out) throw JsonFormatError(path + ": write failed");
}

}  // namespace frobkit
