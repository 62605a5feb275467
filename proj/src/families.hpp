#pragma once

// Named endomorphism families on M_n.  "identity", "diagonal", and "trace"
// exist at every size; the "bipro3-1/2/3" families are the classification
// of the lambda = 1 biprojections on M_2 (one rational parameter s, one
// nonzero parameter u, and a pair (k, t) with k != 1/2 and t != 0).
// A parametric variant builds family 1 over the polynomial ring Q[s], so
// its predicates can be verified as identities in s.

#include <string>
#include <vector>

#include "endo.hpp"
#include "rat.hpp"

namespace frobkit {

/// All recognized family names, in the order used by documentation.
const std::vector<std::string>& family_names();

/// Constructs the named family member.  Throws std::invalid_argument for an
/// unknown name, a size other than 2 for the bipro3 families, a wrong
/// parameter count, or an excluded parameter value (u = 0, k = 1/2, t = 0).
Endo family_endo(const std::string& name, int n, const std::vector<Rat>& params);

/// Family bipro3-1 with a generic parameter: entries in Q[s].
PolyEndo family_bipro3_1_poly();

}  // namespace frobkit
