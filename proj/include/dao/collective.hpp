#pragma once

#include "dao/profile.hpp"

#include <cstddef>
#include <vector>

namespace dao {

// A feasible parameter group of the collective mechanism: full-access price
// P1, partial-access threshold P2 = P1 / (1 + alpha), the count k1 of members
// with full access and the count k2 of members with any access.
struct FeasibleParams {
    Rational p1;
    Rational p2;
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    Rational alpha;

    friend bool operator==(const FeasibleParams& a, const FeasibleParams& b) = default;
};

// Aggregation function: max over i of sum_{j<=i} min(b_j, (1+alpha) b_i).
// Degenerates to the baseline WTP at alpha = 0. O(n^2).
Rational wtp_collective(const BidProfile& profile, const Rational& alpha);

// Water-filling parameter search: widest pool (largest k2) whose capacity
// reaches p_total, then the lowest water line P1 that balances the budget.
// Requires 0 <= p_total <= wtp_collective; p_total = 0 yields (0, 0, n, n).
// Throws losing_price_error above the WTP.
FeasibleParams optimal_parameters(const BidProfile& profile, const Rational& p_total,
                                  const Rational& alpha);

// x_i = 1, p_i = P1 up to k1; x_i = b_i / P1, p_i = b_i up to k2; nothing
// beyond. Uniform pricing x_i = p_i / P1 and exact budget balance. Validates
// the parameter group against the profile first. Rank order.
MechanismOutcome allocate_collective(const BidProfile& profile, const FeasibleParams& params);

// Definition check for a parameter group: P2 relation, k1/k2 as the maximal
// thresholds, k1 <= k2. Throws invariant_error naming the failed condition.
void validate_feasible(const BidProfile& profile, const FeasibleParams& params);

// Collective utility of member i: -infinity if charged above value, else
// v_i x_i - p_i + alpha * SW when accessing, else -p_i. values, outcome.x and
// outcome.p must share one indexing.
ExtendedValue member_utility(std::size_t i, const std::vector<Rational>& values,
                             const MechanismOutcome& outcome, const Rational& alpha);

// All feasible parameter groups, one per admissible pool width, ordered by
// k2 descending. Independent of the water-filling in optimal_parameters:
// solves the budget-balance identity per (k2, k1) pair and keeps solutions
// consistent with the threshold definitions.
std::vector<FeasibleParams> enumerate_feasible_params(const BidProfile& profile,
                                                      const Rational& p_total,
                                                      const Rational& alpha);

} // namespace dao
