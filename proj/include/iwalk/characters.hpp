#pragma once

#include <map>
#include <string>
#include <vector>

#include "iwalk/partition.hpp"
#include "iwalk/rational.hpp"

namespace iwalk {

// chi_lambda(alpha) by the Murnaghan-Nakayama rule, memoized. Requires
// |lambda| == n of alpha.
Int character(const Partition& lambda, const CycleType& alpha);

// chi_lambda(1^{n-2s}, 2^s). The hot path for the walk: 2-strips are removed
// first, the remaining 1-cycle tail collapses to a dimension.
Int character_involution(const Partition& lambda, int s);

// Same character through the character polynomial (border strips peeled from
// below the first row with binomial weights, 1-cycles inserted via the
// product formula continued to all integers). Independent of the plain MN
// recursion; must agree with character_involution exactly.
Int character_involution_poly(const Partition& lambda, int s);

// chi with an explicit strip removal order (cycle lengths processed front to
// back). Unmemoized; exists so tests can confirm order invariance.
Int character_with_order(const Partition& lambda, const std::vector<int>& cycles);

// chi_lambda(2, 1^{n-2}) / d_lambda. Requires n >= 2.
Rat transposition_character_ratio(const Partition& lambda);

// Snapshot of both memo tables as "lambda|alpha" -> decimal strings, for the
// on-disk dump.
std::map<std::string, std::string> character_memo_snapshot();

}  // namespace iwalk
