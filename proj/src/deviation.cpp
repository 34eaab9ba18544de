#include "dao/deviation.hpp"

#include "dao/errors.hpp"

#include <algorithm>
#include <set>

namespace dao {

namespace {

// Utility of member `original_id` of DAO `dao` under an auction result.
ExtendedValue utility_of(const AuctionInstance& instance, const AuctionResult& result,
                         std::size_t dao, std::size_t original_id) {
    const DaoInput& input = instance.daos[dao];
    return member_utility(original_id, input.values, result.dao_outcomes[dao],
                          input.mechanism.alpha);
}

} // namespace

DeviationReport ic_deviation_scan(const AuctionInstance& instance, std::size_t dao,
                                  std::size_t member_rank, const DeviationGrid& grid) {
    validate_instance(instance);
    if (dao >= instance.daos.size()) throw invariant_error("ic_deviation_scan: DAO out of range");
    const DaoInput& input = instance.daos[dao];
    if (member_rank >= input.bids.size())
        throw invariant_error("ic_deviation_scan: member rank out of range");

    BidProfile truthful_profile = make_profile(input.bids);
    const std::size_t original_id = truthful_profile.original_index(member_rank);
    const Rational value = input.values[original_id];

    AuctionResult truthful_result = run_auction(instance);
    ExtendedValue truthful_utility = utility_of(instance, truthful_result, dao, original_id);

    std::set<Rational> candidates;
    candidates.insert(input.bids[original_id]); // the identity deviation
    for (std::size_t k = 1; k <= grid.underbid_points; ++k) {
        Rational frac = Rational{static_cast<long long>(k)} /
                        Rational{static_cast<long long>(grid.underbid_points + 1)};
        candidates.insert(value * frac);
    }
    for (std::size_t k = 1; k <= grid.overbid_points; ++k) {
        Rational step = (grid.overbid_max - Rational{1}) *
                        Rational{static_cast<long long>(k)} /
                        Rational{static_cast<long long>(grid.overbid_points)};
        candidates.insert(value * (Rational{1} + step));
    }
    if (grid.structural_breakpoints) {
        std::set<Rational> breakpoints;
        for (std::size_t id = 0; id < input.bids.size(); ++id) {
            if (id != original_id) breakpoints.insert(input.bids[id]);
        }
        if (input.mechanism.kind == MechanismKind::collective &&
            truthful_result.winner == dao && !truthful_result.p_total.is_zero()) {
            FeasibleParams params = optimal_parameters(truthful_profile, truthful_result.p_total,
                                                       input.mechanism.alpha);
            breakpoints.insert(params.p1);
            breakpoints.insert(params.p2);
            Rational one_plus_alpha = Rational{1} + input.mechanism.alpha;
            for (std::size_t id = 0; id < input.bids.size(); ++id) {
                if (id != original_id) breakpoints.insert(one_plus_alpha * input.bids[id]);
            }
        }
        if (grid.midpoints && breakpoints.size() > 1) {
            const Rational half = Rational{1} / Rational{2};
            for (auto it = breakpoints.begin(); std::next(it) != breakpoints.end(); ++it) {
                candidates.insert((*it + *std::next(it)) * half);
            }
        }
        candidates.insert(breakpoints.begin(), breakpoints.end());
    }

    DeviationReport report;
    report.dao = dao;
    report.member_rank = member_rank;
    report.truthful_utility = truthful_utility;
    report.best_deviation_utility = truthful_utility;
    report.best_deviation_bid = input.bids[original_id];

    AuctionInstance deviated = instance;
    for (const Rational& bid : candidates) {
        if (bid.is_negative()) continue;
        deviated.daos[dao].bids[original_id] = bid;
        AuctionResult result = run_auction(deviated);
        ExtendedValue utility = utility_of(deviated, result, dao, original_id);
        if (utility > report.best_deviation_utility) {
            report.best_deviation_utility = utility;
            report.best_deviation_bid = bid;
        }
    }
    report.profitable = report.best_deviation_utility > truthful_utility;
    return report;
}

AuctionInstance grouped_underbid_witness() {
    // Values (4, 2, 2) grouped against a rival bidding 5. Truthfully the
    // optimal grouping is {1},{2,3} with WTP 8; the DAO wins at 5 and member
    // 1 pays 5/2 (utility 3/2). Bidding 2 instead turns the optimal grouping
    // into singletons with WTP 6; still winning, every member pays 5/3, and
    // member 1's utility rises to 7/3.
    AuctionInstance instance;
    DaoInput colluders;
    colluders.name = "subgroupers";
    colluders.values = {Rational{4}, Rational{2}, Rational{2}};
    colluders.bids = colluders.values;
    colluders.mechanism = {MechanismKind::grouped, Rational{0}};
    DaoInput rival;
    rival.name = "rival";
    rival.values = {Rational{5}};
    rival.bids = rival.values;
    rival.mechanism = {MechanismKind::baseline, Rational{0}};
    instance.daos = {colluders, rival};
    return instance;
}

} // namespace dao
