#include "claims.hpp"

#include <chrono>
#include <stdexcept>

namespace frobkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string canonical_claim(std::string name) {
  for (char& c : name)
    if (c == '_') c = '-';
  return name;
}

/// Normal forms of `polys` against `gb`, stopping at the deadline.
/// Returns the number of nonzero normal forms and the first offending
/// index, checking the remaining budget between reductions.
struct MembershipScan {
  int nonzero = 0;
  int first_nonzero = -1;
};

MembershipScan scan_membership(const std::vector<MPoly>& polys,
                               const GroebnerBasis& gb,
                               Clock::time_point start, double budget) {
  MembershipScan out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (budget > 0 && seconds_since(start) > budget)
      throw ResourceLimitError("normal-form scan exceeded the wall-clock budget");
    if (!normal_form(polys[i], gb).is_zero()) {
      ++out.nonzero;
      if (out.first_nonzero < 0) out.first_nonzero = static_cast<int>(i);
    }
  }
  return out;
}

}  // namespace

std::string claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass: return "pass";
    case ClaimStatus::kFail: return "fail";
    case ClaimStatus::kResourceLimited: return "resource-limited";
  }
  return "fail";
}

const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names = {
      "bipro-implies-er", "dimensions", "lambda-spectrum",
      "unital-er-implies-idempotent"};
  return names;
}

std::optional<std::pair<int, int>> expected_dimensions(int n) {
  // n = 2 and n = 3 are the published Krull dimensions of [I, J]; the n = 1
  // pair is by hand: I forces A = 1, x = 1 (a point), while J leaves x free
  // (its exchange generators vanish identically), giving dimension 1.
  switch (n) {
    case 1: return std::pair<int, int>{0, 1};
    case 2: return std::pair<int, int>{2, 3};
    case 3: return std::pair<int, int>{6, 7};
    default: return std::nullopt;
  }
}

ClaimRunner::ClaimRunner(int n, ClaimBudget budget) : n_(n), budget_(budget) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
}

const EquationSet& ClaimRunner::equations() {
  if (!eqs_) eqs_ = make_eqs(n_);
  return *eqs_;
}

const GroebnerBasis& ClaimRunner::basis_of(Sys which, double remaining_seconds) {
  std::optional<GroebnerBasis>& slot =
      which == Sys::kI ? gb_i_ : which == Sys::kJ ? gb_j_ : gb_k_;
  if (slot) return *slot;
  if (remaining_seconds <= 0)
    throw ResourceLimitError("wall-clock budget exhausted before the Groebner run");

  const EquationSet& es = equations();
  std::vector<MPoly> gens;
  if (which == Sys::kI) {
    gens.insert(gens.end(), es.eqs1.begin(), es.eqs1.end());
    gens.insert(gens.end(), es.eqs2.begin(), es.eqs2.end());
    gens.insert(gens.end(), es.eqs3.begin(), es.eqs3.end());
    gens.insert(gens.end(), es.eqs4.begin(), es.eqs4.end());
  } else if (which == Sys::kJ) {
    gens.insert(gens.end(), es.eqs1.begin(), es.eqs1.end());
    gens.insert(gens.end(), es.eqs2.begin(), es.eqs2.end());
    gens.insert(gens.end(), es.eqs3.begin(), es.eqs3.end());
    gens.insert(gens.end(), es.eqs5.begin(), es.eqs5.end());
  } else {
    gens.insert(gens.end(), es.eqs2.begin(), es.eqs2.end());
    gens.insert(gens.end(), es.eqs5.begin(), es.eqs5.end());
  }
  GBOptions opts;
  opts.budget_seconds = remaining_seconds;
  slot = groebner(make_ideal(es.ring, std::move(gens)), opts);
  return *slot;
}

ClaimReport ClaimRunner::bipro_implies_er() {
  ClaimReport rep;
  rep.claim = "bipro-implies-er";
  rep.evidence["ideal"] = "eqs1+eqs2+eqs3+eqs4";
  rep.evidence["checked_polynomials"] = equations().eqs5.size();
  const auto start = Clock::now();
  try {
    const GroebnerBasis& gb =
        basis_of(Sys::kI, budget_.seconds - seconds_since(start));
    rep.evidence["groebner_basis_size"] = gb.basis.size();
    MembershipScan scan =
        scan_membership(equations().eqs5, gb, start, budget_.seconds);
    rep.evidence["nonzero_normal_forms"] = scan.nonzero;
    if (scan.nonzero == 0) {
      rep.status = ClaimStatus::kPass;
    } else {
      rep.status = ClaimStatus::kFail;
      rep.evidence["first_nonzero_index"] = scan.first_nonzero;
    }
  } catch (const ResourceLimitError& e) {
    rep.status = ClaimStatus::kResourceLimited;
    rep.evidence["limit"] = e.what();
  }
  rep.seconds = seconds_since(start);
  return rep;
}

ClaimReport ClaimRunner::dimensions() {
  if (n_ > 3)
    throw std::invalid_argument(
        "the dimensions claim has reference values for n <= 3 only");
  ClaimReport rep;
  rep.claim = "dimensions";
  rep.evidence["ideals"] =
      nlohmann::ordered_json::array({"eqs1+eqs2+eqs3+eqs4", "eqs1+eqs2+eqs3+eqs5"});
  const auto expected = expected_dimensions(n_);
  rep.evidence["expected"] =
      nlohmann::ordered_json::array({expected->first, expected->second});
  rep.evidence["dimensions"] =
      nlohmann::ordered_json::array({nullptr, nullptr});
  const auto start = Clock::now();
  try {
    const GroebnerBasis& gb_i =
        basis_of(Sys::kI, budget_.seconds - seconds_since(start));
    const int dim_i = ideal_dimension(gb_i);
    rep.evidence["dimensions"][0] = dim_i;
    const GroebnerBasis& gb_j =
        basis_of(Sys::kJ, budget_.seconds - seconds_since(start));
    const int dim_j = ideal_dimension(gb_j);
    rep.evidence["dimensions"][1] = dim_j;
    rep.status = (dim_i == expected->first && dim_j == expected->second)
                     ? ClaimStatus::kPass
                     : ClaimStatus::kFail;
  } catch (const ResourceLimitError& e) {
    rep.status = ClaimStatus::kResourceLimited;
    rep.evidence["limit"] = e.what();
  }
  rep.seconds = seconds_since(start);
  return rep;
}

ClaimReport ClaimRunner::lambda_spectrum() {
  if (n_ != 2)
    throw std::invalid_argument("the lambda-spectrum claim is defined for n = 2");
  ClaimReport rep;
  rep.claim = "lambda-spectrum";
  rep.evidence["cubic"] = "(x - 1/2)*(x - 1)*(x - 2)";
  const auto start = Clock::now();
  try {
    const EquationSet& es = equations();
    const GroebnerBasis& gb_i =
        basis_of(Sys::kI, budget_.seconds - seconds_since(start));
    const MPoly x = MPoly::var(es.ring, es.x_index());
    const MPoly cubic =
        (x - Rat(1) / 2) * (x - Rat(1)) * (x - Rat(2));
    const bool member = normal_form(cubic, gb_i).is_zero();
    rep.evidence["cubic_membership"] = member;

    auto fiber = [&](const Rat& value) {
      std::vector<MPoly> gens = gb_i.ideal.gens;
      gens.push_back(x - value);
      GBOptions opts;
      opts.budget_seconds = budget_.seconds - seconds_since(start);
      if (opts.budget_seconds <= 0)
        throw ResourceLimitError("wall-clock budget exhausted before the fiber run");
      return groebner(make_ideal(es.ring, std::move(gens)), opts);
    };
    const auto vs_half = vector_space_dimension(fiber(Rat(1) / 2));
    const auto vs_two = vector_space_dimension(fiber(Rat(2)));
    const int dim_one = ideal_dimension(fiber(Rat(1)));
    rep.evidence["fiber_vector_space_dimensions"]["1/2"] =
        vs_half ? nlohmann::ordered_json(*vs_half) : nlohmann::ordered_json();
    rep.evidence["fiber_vector_space_dimensions"]["2"] =
        vs_two ? nlohmann::ordered_json(*vs_two) : nlohmann::ordered_json();
    rep.evidence["lambda_1_krull_dimension"] = dim_one;
    const bool pass = member && vs_half && *vs_half == 1 && vs_two &&
                      *vs_two == 1 && dim_one == 2;
    rep.status = pass ? ClaimStatus::kPass : ClaimStatus::kFail;
  } catch (const ResourceLimitError& e) {
    rep.status = ClaimStatus::kResourceLimited;
    rep.evidence["limit"] = e.what();
  }
  rep.seconds = seconds_since(start);
  return rep;
}

ClaimReport ClaimRunner::unital_er_implies_idempotent() {
  ClaimReport rep;
  rep.claim = "unital-er-implies-idempotent";
  rep.evidence["ideal"] = "eqs2+eqs5";
  rep.evidence["checked_polynomials"] = equations().eqs3.size();
  const auto start = Clock::now();
  try {
    const GroebnerBasis& gb =
        basis_of(Sys::kK, budget_.seconds - seconds_since(start));
    rep.evidence["groebner_basis_size"] = gb.basis.size();
    MembershipScan scan =
        scan_membership(equations().eqs3, gb, start, budget_.seconds);
    rep.evidence["nonzero_normal_forms"] = scan.nonzero;
    if (scan.nonzero == 0) {
      rep.status = ClaimStatus::kPass;
    } else {
      rep.status = ClaimStatus::kFail;
      rep.evidence["first_nonzero_index"] = scan.first_nonzero;
    }
  } catch (const ResourceLimitError& e) {
    rep.status = ClaimStatus::kResourceLimited;
    rep.evidence["limit"] = e.what();
  }
  rep.seconds = seconds_since(start);
  return rep;
}

ClaimReport ClaimRunner::run(const std::string& claim) {
  const std::string id = canonical_claim(claim);
  if (id == "bipro-implies-er") return bipro_implies_er();
  if (id == "dimensions") return dimensions();
  if (id == "lambda-spectrum") return lambda_spectrum();
  if (id == "unital-er-implies-idempotent") return unital_er_implies_idempotent();
  throw std::invalid_argument("unknown claim '" + claim + "'");
}

std::vector<ClaimReport> ClaimRunner::run_all() {
  std::vector<ClaimReport> out;
  out.push_back(bipro_implies_er());
  if (n_ <= 3) out.push_back(dimensions());
  if (n_ == 2) out.push_back(lambda_spectrum());
  out.push_back(unital_er_implies_idempotent());
  return out;
}

}  // namespace frobkit
