#pragma once

#include "dao/profile.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dao {

// An ordered partition of a DAO's members into subgroups. Members are
// identified by rank (0-based position in the value-sorted profile); each
// subgroup lists its ranks in ascending order.
struct Grouping {
    std::vector<std::vector<std::size_t>> subgroups;

    static Grouping degenerate(std::size_t n); // single subgroup {0..n-1}
    static Grouping singletons(std::size_t n);

    bool is_partition_of(std::size_t n) const;
    // No crossing: no a < b < c with a, c in one subgroup and b in another.
    bool is_continuous() const;

    friend bool operator==(const Grouping& a, const Grouping& b) = default;
};

// Subgroup valuation WTP^j = max_i i * v_i over the subgroup's members,
// values given non-increasingly. Throws invariant_error on empty input.
Rational subgroup_wtp(std::span<const Rational> values_desc);

// Per-subgroup WTPs plus the DAO-level critical index / critical value.
// subgroup_wtps follows the grouping's subgroup order; critical_index is a
// count over the non-increasingly sorted subgroup WTPs (largest maximizer),
// and wtp_total = critical_index * critical_value.
struct GroupingEvaluation {
    std::vector<Rational> subgroup_wtps;
    Rational wtp_total;
    std::size_t critical_index = 0;
    Rational critical_value;
};

GroupingEvaluation evaluate_grouping(const BidProfile& values, const Grouping& grouping);

// Output of the optimal grouping algorithm. premerge_sizes holds the greedy
// interval sizes before the leftover tail is merged into the k-th subgroup.
struct OptimalGroupingResult {
    Grouping grouping;
    GroupingEvaluation eval;
    Rational opt_wtp;
    Rational opt_cv;
    std::size_t k = 0;
    std::vector<std::size_t> premerge_sizes;
};

// The O(n^3) optimal grouping algorithm: enumerate the O(n^2) interval
// valuations as candidate critical values, greedily count the critical index
// for each, keep the best product, and rebuild the grouping from the winning
// candidate with the leftover tail merged into the last subgroup. The result
// is a continuous grouping attaining max WTP_total over all groupings.
OptimalGroupingResult optimal_grouping(const BidProfile& values);

// Streams all 2^(n-1) compositions of [n] into continuous intervals.
// visit returns false to stop early. Requires 1 <= n <= 20.
void for_each_continuous_grouping(std::size_t n,
                                  const std::function<bool(const Grouping&)>& visit);
std::vector<Grouping> enumerate_continuous_groupings(std::size_t n);

// Streams all Bell(n) set partitions of [n]. Requires 1 <= n <= 10.
void for_each_grouping(std::size_t n, const std::function<bool(const Grouping&)>& visit);
std::vector<Grouping> enumerate_all_groupings(std::size_t n);

// Two-level cascade: subgroups are allocated by the baseline rule as if they
// were members (ties in subgroup WTP broken by lowest member rank), then each
// winning subgroup distributes its price internally with the same rule.
// Output is in rank order; budget balance holds end-to-end.
MechanismOutcome two_level_allocation(const BidProfile& values, const Grouping& grouping,
                                      const Rational& p_total);

enum class Excludability { less_excludable, more_excludable, equal, incomparable };

// Pointwise comparison of access vectors: x1 >= x2 everywhere means x1 is the
// less-excludable allocation. Throws invariant_error on length mismatch.
Excludability compare_excludability(const std::vector<Rational>& x1,
                                    const std::vector<Rational>& x2);

} // namespace dao
