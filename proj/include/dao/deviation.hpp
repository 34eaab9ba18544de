#pragma once

#include "dao/auction.hpp"

#include <cstddef>

namespace dao {

// Deviation grid: uniform underbid fractions of the true value in (0,1),
// uniform overbid multipliers in (1, overbid_max], plus exact structural
// breakpoints from the truthful run (other members' bids; P1, P2 and the
// pool caps (1+alpha) b_j for collective DAOs) and the midpoints between
// adjacent breakpoints. The truthful bid itself is always included.
struct DeviationGrid {
    std::size_t underbid_points = 64;
    std::size_t overbid_points = 32;
    Rational overbid_max = Rational{4};
    bool structural_breakpoints = true;
    bool midpoints = true;
};

struct DeviationReport {
    std::size_t dao = 0;
    std::size_t member_rank = 0; // rank in the DAO's truthful sorted profile
    ExtendedValue truthful_utility;
    ExtendedValue best_deviation_utility;
    Rational best_deviation_bid;
    bool profitable = false; // best strictly above truthful
};

// Re-runs the full two-level auction for every candidate deviated bid of the
// given member and reports the best deviation found. Utilities use the DAO's
// collective factor (zero for the quasi-linear mechanisms) and true values.
DeviationReport ic_deviation_scan(const AuctionInstance& instance, std::size_t dao,
                                  std::size_t member_rank, const DeviationGrid& grid = {});

// The shipped counterexample for the grouped two-level mechanism: a
// high-value member strictly profits by underbidding into a larger subgroup.
AuctionInstance grouped_underbid_witness();

} // namespace dao
