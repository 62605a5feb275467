// The polynomial equation systems and the named claim suite at desk scale
// (n = 1 and n = 2): generator counts, substitution soundness against the
// concrete endomorphism layer, ideal membership, dimensions, the lambda
// spectrum, and budget/determinism behavior.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "claims.hpp"
#include "doctest.h"
#include "endo.hpp"
#include "families.hpp"

using namespace frobkit;

namespace {

Endo er_violator() {
  Endo p = zero_endo(2);
  p.at(0, 0, 0, 0) = 1;
  p.at(1, 1, 1, 1) = 1;
  p.at(0, 1, 0, 1) = Rat(1) / 2;
  p.at(0, 1, 1, 0) = Rat(1) / 2;
  p.at(1, 0, 0, 1) = Rat(1) / 2;
  p.at(1, 0, 1, 0) = Rat(1) / 2;
  return p;
}

bool all_vanish(const std::vector<MPoly>& polys, const std::vector<Rat>& point) {
  for (const MPoly& p : polys)
    if (!rat_is_zero(p.eval(point))) return false;
  return true;
}

}  // namespace

TEST_CASE("make_eqs generator counts") {
  EquationSet e1 = make_eqs(1);
  CHECK(e1.ring->vars.size() == 2);  // A_1_1_1_1 and x
  CHECK(e1.eqs1.size() == 1);
  CHECK(e1.eqs2.size() == 1);
  CHECK(e1.eqs3.size() == 1);
  CHECK(e1.eqs4.size() == 1);
  CHECK(e1.eqs5.size() == 2);

  EquationSet e2 = make_eqs(2);
  CHECK(e2.ring->vars.size() == 17);
  CHECK(e2.eqs1.size() == 16);
  CHECK(e2.eqs2.size() == 4);
  CHECK(e2.eqs3.size() == 16);
  CHECK(e2.eqs4.size() == 16);
  CHECK(e2.eqs5.size() == 128);

  EquationSet e3 = make_eqs(3);
  CHECK(e3.ring->vars.size() == 82);
  CHECK(e3.eqs1.size() == 81);
  CHECK(e3.eqs2.size() == 9);
  CHECK(e3.eqs3.size() == 81);
  CHECK(e3.eqs4.size() == 81);
  CHECK(e3.eqs5.size() == 1458);
}

TEST_CASE("substitution soundness: family coefficients solve the systems") {
  struct Sample {
    Endo t;
    Rat lambda;
  };
  std::vector<Sample> samples = {
      {identity_endo(2), Rat(2)},
      {diagonal_endo(2), Rat(1)},
      {trace_endo(2), Rat(1) / 2},
      {family_endo("bipro3-1", 2, {Rat(3)}), Rat(1)},
      {family_endo("bipro3-2", 2, {Rat(-5)}), Rat(1)},
      {family_endo("bipro3-3", 2, {Rat(3), Rat(2)}), Rat(1)},
  };
  EquationSet es = make_eqs(2);
  for (const Sample& s : samples) {
    const std::vector<Rat> point = equation_point(s.t.a, s.lambda);
    CHECK(all_vanish(es.eqs1, point));
    CHECK(all_vanish(es.eqs2, point));
    CHECK(all_vanish(es.eqs3, point));
    CHECK(all_vanish(es.eqs4, point));
    CHECK(all_vanish(es.eqs5, point));
  }
}

TEST_CASE("substitution soundness holds for the diagonal map at n = 3") {
  EquationSet es = make_eqs(3);
  const std::vector<Rat> point = equation_point(diagonal_endo(3).a, Rat(1));
  CHECK(all_vanish(es.eqs1, point));
  CHECK(all_vanish(es.eqs2, point));
  CHECK(all_vanish(es.eqs3, point));
  CHECK(all_vanish(es.eqs4, point));
  CHECK(all_vanish(es.eqs5, point));
}

TEST_CASE("the ER violator solves eqs1-eqs3 but not eqs5") {
  EquationSet es = make_eqs(2);
  const std::vector<Rat> point = equation_point(er_violator().a, Rat(1));
  CHECK(all_vanish(es.eqs1, point));
  CHECK(all_vanish(es.eqs2, point));
  CHECK(all_vanish(es.eqs3, point));
  CHECK_FALSE(all_vanish(es.eqs5, point));
}

TEST_CASE("claim: biprojection implies exchange relations (n = 1, 2)") {
  for (int n : {1, 2}) {
    ClaimRunner runner(n);
    ClaimReport rep = runner.bipro_implies_er();
    CHECK(rep.claim == "bipro-implies-er");
    CHECK(rep.status == ClaimStatus::kPass);
    CHECK(rep.evidence["nonzero_normal_forms"] == 0);
    CHECK(rep.evidence["checked_polynomials"] == 2 * n * n * n * n * n * n);
  }
}

TEST_CASE("claim: variety dimensions (n = 1, 2)") {
  {
    ClaimRunner runner(1);
    ClaimReport rep = runner.dimensions();
    CHECK(rep.status == ClaimStatus::kPass);
    // I cuts the single point A = 1, x = 1; J leaves x free.
    CHECK(rep.evidence["dimensions"][0] == 0);
    CHECK(rep.evidence["dimensions"][1] == 1);
  }
  {
    ClaimRunner runner(2);
    ClaimReport rep = runner.dimensions();
    CHECK(rep.status == ClaimStatus::kPass);
    CHECK(rep.evidence["dimensions"][0] == 2);
    CHECK(rep.evidence["dimensions"][1] == 3);
    CHECK(rep.evidence["expected"][0] == 2);
    CHECK(rep.evidence["expected"][1] == 3);
  }
  CHECK(expected_dimensions(3) == std::pair<int, int>{6, 7});
  CHECK_FALSE(expected_dimensions(4));
}

TEST_CASE("claim: lambda spectrum at n = 2") {
  ClaimRunner runner(2);
  ClaimReport rep = runner.lambda_spectrum();
  CHECK(rep.status == ClaimStatus::kPass);
  CHECK(rep.evidence["cubic_membership"] == true);
  CHECK(rep.evidence["fiber_vector_space_dimensions"]["1/2"] == 1);
  CHECK(rep.evidence["fiber_vector_space_dimensions"]["2"] == 1);
  CHECK(rep.evidence["lambda_1_krull_dimension"] == 2);

  ClaimRunner r3(3);
  CHECK_THROWS_AS(r3.lambda_spectrum(), std::invalid_argument);
}

TEST_CASE("claim: unital + ER implies idempotent (n = 1, 2)") {
  for (int n : {1, 2}) {
    ClaimRunner runner(n);
    ClaimReport rep = runner.unital_er_implies_idempotent();
    CHECK(rep.claim == "unital-er-implies-idempotent");
    CHECK(rep.status == ClaimStatus::kPass);
    CHECK(rep.evidence["nonzero_normal_forms"] == 0);
  }
}

TEST_CASE("corpus cross-check: concrete unital + ER endomorphisms are idempotent") {
  std::vector<Endo> corpus = {
      identity_endo(2),  identity_endo(3),
      diagonal_endo(2),  diagonal_endo(3),
      trace_endo(2),     trace_endo(3),
      family_endo("bipro3-1", 2, {Rat(4)}),
      family_endo("bipro3-2", 2, {Rat(1) / 3}),
      family_endo("bipro3-3", 2, {Rat(-2), Rat(5)}),
      er_violator(),
  };
  int applicable = 0;
  for (const Endo& t : corpus) {
    const bool unital = check_predicate(t, Predicate::kUnital).holds;
    const bool er = check_predicate(t, Predicate::kEr).holds;
    if (unital && er) {
      ++applicable;
      CHECK(check_predicate(t, Predicate::kIdempotent).holds);
    }
  }
  CHECK(applicable == 9);  // everything except the ER violator
}

TEST_CASE("an exhausted budget reports resource-limited, never pass or fail") {
  ClaimRunner runner(2, ClaimBudget{1e-9});
  for (const std::string& name :
       {std::string("bipro-implies-er"), std::string("dimensions"),
        std::string("lambda-spectrum"), std::string("unital-er-implies-idempotent")}) {
    ClaimReport rep = runner.run(name);
    CHECK(rep.status == ClaimStatus::kResourceLimited);
    CHECK(rep.evidence.contains("limit"));
  }
}

TEST_CASE("claim dispatch and identifier normalization") {
  ClaimRunner runner(1);
  CHECK(runner.run("unital_er_implies_idempotent").claim ==
        "unital-er-implies-idempotent");
  CHECK_THROWS_AS(runner.run("nonesuch"), std::invalid_argument);
  CHECK(claim_status_name(ClaimStatus::kPass) == "pass");
  CHECK(claim_status_name(ClaimStatus::kFail) == "fail");
  CHECK(claim_status_name(ClaimStatus::kResourceLimited) == "resource-limited");
}

TEST_CASE("run_all covers the claims applicable at each size") {
  ClaimRunner r1(1);
  auto all1 = r1.run_all();
  REQUIRE(all1.size() == 3);  // lambda-spectrum needs n = 2
  CHECK(all1[0].claim == "bipro-implies-er");
  CHECK(all1[1].claim == "dimensions");
  CHECK(all1[2].claim == "unital-er-implies-idempotent");
  for (const auto& rep : all1) CHECK(rep.status == ClaimStatus::kPass);

  ClaimRunner r2(2);
  auto all2 = r2.run_all();
  REQUIRE(all2.size() == 4);
  CHECK(all2[2].claim == "lambda-spectrum");
  for (const auto& rep : all2) CHECK(rep.status == ClaimStatus::kPass);
}

TEST_CASE("reports are deterministic apart from the timing field") {
  ClaimRunner a(2), b(2);
  ClaimReport ra = a.lambda_spectrum();
  ClaimReport rb = b.lambda_spectrum();
  CHECK(ra.evidence.dump() == rb.evidence.dump());
  CHECK(ra.status == rb.status);
}
