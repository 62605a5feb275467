// Parser, typechecker, and exact evaluator for the diagram language, pinned
// against hand-derived arities, error offsets, and the Frobenius axiom
// corpus on both matrix models and general algebras.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "dsl.hpp"
#include "endo.hpp"
#include "frobalg.hpp"
#include "tensor.hpp"

using namespace frobkit;

namespace {

std::mt19937 rng(977);

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

std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(FROBKIT_TEST_DATA_DIR) + "/" + rel);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<int, int> arity_of(const std::string& text) {
  MorphExpr e = parse_expr(text);
  return typecheck_expr(e);
}

bool tree_equal(const MorphExpr& a, const MorphExpr& b) {
  if (a.kind != b.kind || a.name != b.name ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!tree_equal(a.children[i], b.children[i])) return false;
  return true;
}

std::size_t offset_of_parse_error(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const DslParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for: " << text);
  return 0;
}

}  // namespace

TEST_CASE("parsing and arities of the documented examples") {
  CHECK(arity_of("m . (e ox id)") == std::pair<int, int>{1, 1});
  CHECK(arity_of("(m ox id) . (id ox delta)") == std::pair<int, int>{2, 2});
  CHECK(arity_of("delta . m") == std::pair<int, int>{2, 2});
  CHECK(arity_of("eps . e") == std::pair<int, int>{0, 0});
  CHECK(arity_of("#b") == std::pair<int, int>{1, 1});
  CHECK(arity_of("ev") == std::pair<int, int>{2, 0});
  CHECK(arity_of("coev") == std::pair<int, int>{0, 2});
}

TEST_CASE("parse errors carry byte offsets") {
  // Trailing composition: the missing operand is reported at end of input.
  CHECK(offset_of_parse_error("m . delta .") == 11);
  CHECK(offset_of_parse_error("foo") == 0);        // unknown atom
  CHECK(offset_of_parse_error("m . foo") == 4);    // unknown atom, offset 4
  CHECK(offset_of_parse_error("m $ e") == 2);      // stray character
  CHECK(offset_of_parse_error("# b") == 0);        // '#' without a name
  CHECK(offset_of_parse_error("(m ox id") == 8);   // unbalanced '('
  CHECK(offset_of_parse_error(") m") == 0);        // unbalanced ')'
  CHECK(offset_of_parse_error("m e") == 2);        // juxtaposition is not an op
  // The offset is also embedded in the message text.
  try {
    parse_expr("m . foo");
  } catch (const DslParseError& e) {
    CHECK(std::string(e.what()).find("byte 4") != std::string::npos);
    CHECK(std::string(e.what()).find("foo") != std::string::npos);
  }
}

TEST_CASE("typecheck rejects arity mismatches and oversized expressions") {
  MorphExpr e1 = parse_expr("m . e");
  CHECK_THROWS_AS(typecheck_expr(e1), DslTypeError);
  MorphExpr e2 = parse_expr("m . m");
  try {
    typecheck_expr(e2);
    FAIL("expected an arity error");
  } catch (const DslTypeError& err) {
    CHECK(std::string(err.what()).find("produces 1") != std::string::npos);
    CHECK(std::string(err.what()).find("consumes 2") != std::string::npos);
  }
  // (3,6) exceeds the default cap of 6 total strands...
  MorphExpr big = parse_expr("delta ox delta ox delta");
  CHECK_THROWS_AS(typecheck_expr(big), DslTypeError);
  // ... but a caller may raise the cap.
  MorphExpr big2 = parse_expr("delta ox delta ox delta");
  CHECK(typecheck_expr(big2, 12) == std::pair<int, int>{3, 6});
}

TEST_CASE("rendering round-trips to a structurally identical tree") {
  for (const char* text : {
           "m . (e ox id)",
           "(m ox id) . (id ox delta)",
           "delta . m",
           "(ev ox id) . (id ox coev)",
           "#b . m . (#b ox id)",
           "m . (#b ox #b)",
           "a_long_chain"[0] ? "m . (m ox id) . (id ox id ox e)" : "",
           "eps . m . (id ox (m . (id ox e)))",
       }) {
    MorphExpr a = parse_expr(text);
    MorphExpr b = parse_expr(render_expr(a));
    CHECK(tree_equal(a, b));
  }
  // Explicit right association survives printing.
  MorphExpr r = parse_expr("m . (delta . m)");
  CHECK(render_expr(r) == "m . (delta . m)");
  MorphExpr l = parse_expr("eps . delta . m");  // left-associated chain
  CHECK(render_expr(l) == "eps . delta . m");
}

TEST_CASE("evaluation of the documented examples") {
  for (int n = 2; n <= 3; ++n) {
    FrobModel mdl = matrix_model(n);
    MorphExpr left_unit = parse_expr("m . (e ox id)");
    typecheck_expr(left_unit);
    CHECK(evaluate_expr(left_unit, mdl) == tm_identity(mdl.d));
    MorphExpr counit = parse_expr("(eps ox id) . delta");
    typecheck_expr(counit);
    CHECK(evaluate_expr(counit, mdl) == tm_identity(mdl.d));
    // eps . e is the scalar Tr(I_n) = n.
    MorphExpr scalar = parse_expr("eps . e");
    typecheck_expr(scalar);
    TensorMap v = evaluate_expr(scalar, mdl);
    CHECK(v.p == 0);
    CHECK(v.q == 0);
    CHECK(v.mat.at(0, 0) == Rat(n));
  }
}

TEST_CASE("evaluation is compositional") {
  FrobModel mdl = matrix_model(2);
  auto eval = [&](const std::string& s) {
    MorphExpr e = parse_expr(s);
    typecheck_expr(e);
    return evaluate_expr(e, mdl);
  };
  CHECK(eval("delta . m") == tm_compose(eval("delta"), eval("m")));
  CHECK(eval("m ox eps") == tm_kron(eval("m"), eval("eps")));
  CHECK(eval("(eps ox id) . delta") ==
        tm_compose(tm_kron(eval("eps"), eval("id")), eval("delta")));
  CHECK(eval("ev") == tm_compose(eval("eps"), eval("m")));
  CHECK(eval("coev") == tm_compose(eval("delta"), eval("e")));
}

TEST_CASE("assert_equal: axioms hold, differences are located") {
  FrobModel mdl = matrix_model(2);
  CHECK(assert_equal("delta . m", "(m ox id) . (id ox delta)", mdl).equal);
  CHECK(assert_equal("m . (id ox e)", "id", mdl).equal);

  std::map<std::string, RatMat> bind{{"b", matrix_of(diagonal_endo(2))}};
  CHECK(assert_equal("#b . m . (#b ox id)", "m . (#b ox #b)", mdl, bind).equal);

  auto rep = assert_equal("id", "#b", mdl, bind);
  CHECK_FALSE(rep.equal);
  CHECK(rep.out_index.size() == 1);
  CHECK(rep.in_index.size() == 1);
  CHECK(rep.detail.find("first difference") != std::string::npos);

  CHECK_THROWS_AS(assert_equal("m", "delta", mdl), DslTypeError);
}

TEST_CASE("binding errors") {
  FrobModel mdl = matrix_model(2);
  MorphExpr e = parse_expr("#missing");
  typecheck_expr(e);
  CHECK_THROWS_AS(evaluate_expr(e, mdl), DslEvalError);
  MorphExpr f = parse_expr("#b");
  typecheck_expr(f);
  std::map<std::string, RatMat> bad{{"b", RatMat(2, 2)}};  // wrong dimension
  CHECK_THROWS_AS(evaluate_expr(f, mdl, bad), DslEvalError);
}

TEST_CASE("axiom corpus passes on matrix models and general algebras") {
  std::string corpus = slurp("axioms.frob");
  for (int n = 2; n <= 3; ++n) {
    auto results = run_corpus(corpus, matrix_model(n));
    CHECK(results.size() == 11);
    for (const auto& r : results) CHECK(r.report.equal);
  }
  // A general Frobenius algebra: Q x Q with eps(a,b) = a + b.
  std::vector<Rat> c(8, Rat(0));
  c[0] = 1;
  c[7] = 1;
  FrobAlgebra qq = make_general_frobenius(2, c, {Rat(1), Rat(1)}, {Rat(1), Rat(1)});
  for (const auto& r : run_corpus(corpus, model_from(qq))) CHECK(r.report.equal);
  // And the Cayley-Hamilton span of a diagonalizable matrix.
  RatMat x(2, 2);
  x.at(0, 0) = 1;
  x.at(0, 1) = 1;
  x.at(1, 1) = 2;
  FrobAlgebra ch = cayley_hamilton_subalgebra(x);
  for (const auto& r : run_corpus(corpus, model_from(ch))) CHECK(r.report.equal);
}

TEST_CASE("exchange-relation corpus separates the diagonal map from the ER violator") {
  std::string corpus = slurp("er_diagonal.frob");
  FrobModel mdl = matrix_model(2);
  std::map<std::string, RatMat> diag{{"b", matrix_of(diagonal_endo(2))}};
  auto good = run_corpus(corpus, mdl, diag);
  CHECK(good.size() == 2);
  for (const auto& r : good) CHECK(r.report.equal);

  // Projection onto span{E11, E22, E12+E21}: selfdual unital idempotent
  // that violates the exchange relations.
  Endo p = zero_endo(2);
  p.at(0, 0, 0, 0) = 1;
  p.at(1, 1, 1, 1) = 1;
  p.at(0, 1, 0, 1) = Rat(1, 2);
  p.at(0, 1, 1, 0) = Rat(1, 2);
  p.at(1, 0, 0, 1) = Rat(1, 2);
  p.at(1, 0, 1, 0) = Rat(1, 2);
  std::map<std::string, RatMat> viol{{"b", matrix_of(p)}};
  auto bad = run_corpus(corpus, mdl, viol);
  bool all_equal = true;
  for (const auto& r : bad) all_equal = all_equal && r.report.equal;
  CHECK_FALSE(all_equal);
}

TEST_CASE("corpus comment and blank-line handling") {
  FrobModel mdl = matrix_model(2);
  std::map<std::string, RatMat> bind{{"b", matrix_of(diagonal_endo(2))}};
  std::string text =
      "# a full-line comment\n"
      "\n"
      "id == id # trailing comment\n"
      "#b == #b #\n"          // reference on both sides, then an empty comment
      "m . (#b ox id) ox eps == m . (#b ox id) ox eps\n";
  auto results = run_corpus(text, mdl, bind);
  CHECK(results.size() == 3);
  for (const auto& r : results) CHECK(r.report.equal);
  CHECK(results[0].line == 3);
  CHECK(results[1].line == 4);
  CHECK_THROWS_AS(run_corpus("id = id\n", mdl), DslParseError);
  CHECK_THROWS_AS(run_corpus("id == id == id\n", mdl), DslParseError);
}

TEST_CASE("cross-oracle: the duality diagram computes the coefficient dual") {
  FrobModel mdl = matrix_model(2);
  for (int rep = 0; rep < 20; ++rep) {
    Endo t = random_endo(2);
    std::map<std::string, RatMat> bind{{"T", matrix_of(t)}};
    MorphExpr e = parse_expr("(id ox ev) . (id ox #T ox id) . (coev ox id)");
    typecheck_expr(e);
    TensorMap got = evaluate_expr(e, mdl, bind);
    CHECK(got == endo_tensor(dual(t)));
  }
}
