#pragma once

// Machine-checkable versions of the computer-assisted results: membership
// of the exchange relations in the biprojection ideal, Krull dimensions of
// the biprojection and exchange varieties, the lambda spectrum at n = 2,
// and the "unital + exchange relations implies idempotent" implication.
// Each claim reports pass, fail, or resource-limited (budget exhausted) --
// the last is never conflated with a mathematical answer -- together with
// machine-readable evidence and its wall time.
//
// Ideal names follow the generating systems:
//   I = eqs1 + eqs2 + eqs3 + eqs4   (selfdual unital idempotent, conv-stable)
//   J = eqs1 + eqs2 + eqs3 + eqs5   (selfdual unital idempotent, ER)
//   K = eqs2 + eqs5                 (unital, ER)

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqs.hpp"
#include "groebner.hpp"
#include "json.hpp"

namespace frobkit {

enum class ClaimStatus { kPass, kFail, kResourceLimited };

/// "pass", "fail", or "resource-limited".
std::string claim_status_name(ClaimStatus s);

struct ClaimReport {
  std::string claim;
  ClaimStatus status = ClaimStatus::kFail;
  nlohmann::ordered_json evidence;  // deterministic across runs
  double seconds = 0;               // wall time, the only nondeterministic field
};

struct ClaimBudget {
  double seconds = 600;  // wall-clock budget per claim
};

/// Claim identifiers in canonical order: "bipro-implies-er", "dimensions",
/// "lambda-spectrum", "unital-er-implies-idempotent".
const std::vector<std::string>& claim_names();

/// Expected [dim I, dim J] for the sizes with known answers (1, 2, 3).
std::optional<std::pair<int, int>> expected_dimensions(int n);

/// Runs claims for one matrix size, sharing the equation systems and the
/// Groebner bases across claims.  Each claim observes its own budget;
/// exceeding it yields a resource-limited report, never an exception.
class ClaimRunner {
 public:
  explicit ClaimRunner(int n, ClaimBudget budget = {});

  /// Dispatch by identifier ('_' and '-' interchangeable).  Throws
  /// std::invalid_argument for unknown ids and for claims not defined at
  /// this size (lambda-spectrum needs n = 2).
  ClaimReport run(const std::string& claim);
  /// Every claim applicable at this size, in canonical order.
  std::vector<ClaimReport> run_all();

  ClaimReport bipro_implies_er();
  ClaimReport dimensions();
  ClaimReport lambda_spectrum();
  ClaimReport unital_er_implies_idempotent();

  const EquationSet& equations();
  int n() const { return n_; }

 private:
  enum class Sys { kI, kJ, kK };
  /// Cached reduced basis; throws ResourceLimitError on a blown budget.
  const GroebnerBasis& basis_of(Sys which, double remaining_seconds);

  int n_;
  ClaimBudget budget_;
  std::optional<EquationSet> eqs_;
  std::optional<GroebnerBasis> gb_i_, gb_j_, gb_k_;
};

}  // namespace frobkit
