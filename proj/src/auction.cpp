#include "dao/auction.hpp"

#include "dao/baseline.hpp"
#include "dao/errors.hpp"

namespace dao {

std::string mechanism_name(MechanismKind kind) {
    switch (kind) {
    case MechanismKind::baseline: return "baseline";
    case MechanismKind::grouped: return "grouped";
    case MechanismKind::collective: return "collective";
    }
    throw invariant_error("unknown mechanism kind");
}

MechanismKind mechanism_from_name(const std::string& name) {
    if (name == "baseline") return MechanismKind::baseline;
    if (name == "grouped") return MechanismKind::grouped;
    if (name == "collective") return MechanismKind::collective;
    throw parse_error("unknown mechanism: \"" + name + "\"");
}

void validate_instance(const AuctionInstance& instance) {
    if (instance.daos.empty()) throw invariant_error("instance: at least one DAO required");
    for (const DaoInput& dao : instance.daos) {
        if (dao.values.empty()) throw invariant_error("instance: DAO with no members");
        if (dao.values.size() != dao.bids.size())
            throw invariant_error("instance: values/bids length mismatch in DAO \"" + dao.name +
                                  "\"");
        for (const Rational& v : dao.values)
            if (v.is_negative()) throw invariant_error("instance: negative value");
        for (const Rational& b : dao.bids)
            if (b.is_negative()) throw invariant_error("instance: negative bid");
        if (dao.mechanism.alpha.is_negative())
            throw invariant_error("instance: negative collective factor");
    }
}

Rational dao_wtp(const DaoInput& dao) {
    BidProfile profile = make_profile(dao.bids);
    switch (dao.mechanism.kind) {
    case MechanismKind::baseline: return wtp_baseline(profile).value;
    case MechanismKind::grouped: return optimal_grouping(profile).opt_wtp;
    case MechanismKind::collective: return wtp_collective(profile, dao.mechanism.alpha);
    }
    throw invariant_error("unknown mechanism kind");
}

MechanismOutcome dao_allocate(const DaoInput& dao, const Rational& p_total) {
    BidProfile profile = make_profile(dao.bids);
    MechanismOutcome sorted_outcome;
    switch (dao.mechanism.kind) {
    case MechanismKind::baseline:
        sorted_outcome = allocate_baseline(profile, p_total);
        break;
    case MechanismKind::grouped:
        sorted_outcome = two_level_allocation(profile, optimal_grouping(profile).grouping, p_total);
        break;
    case MechanismKind::collective:
        sorted_outcome = allocate_collective(
            profile, optimal_parameters(profile, p_total, dao.mechanism.alpha));
        break;
    }
    return unsort(sorted_outcome, profile);
}

AuctionResult run_auction(const AuctionInstance& instance) {
    validate_instance(instance);
    AuctionResult result;
    result.wtps.reserve(instance.daos.size());
    for (const DaoInput& dao : instance.daos) result.wtps.push_back(dao_wtp(dao));

    std::size_t winner = 0;
    for (std::size_t d = 1; d < instance.daos.size(); ++d) {
        if (result.wtps[d] > result.wtps[winner]) winner = d;
    }
    std::size_t top_count = 0;
    for (const Rational& w : result.wtps)
        if (w == result.wtps[winner]) ++top_count;
    result.critical_tie = top_count > 1;
    result.winner = winner;

    Rational second{0};
    bool has_second = false;
    for (std::size_t d = 0; d < instance.daos.size(); ++d) {
        if (d == winner) continue;
        if (!has_second || result.wtps[d] > second) {
            second = result.wtps[d];
            has_second = true;
        }
    }
    result.p_total = second;

    result.dao_outcomes.reserve(instance.daos.size());
    for (std::size_t d = 0; d < instance.daos.size(); ++d) {
        if (d == winner) {
            result.dao_outcomes.push_back(dao_allocate(instance.daos[d], result.p_total));
        } else {
            result.dao_outcomes.push_back(losing_outcome(instance.daos[d].values.size()));
        }
    }

    result.sw = social_welfare(instance.daos[winner].values, result.dao_outcomes[winner].x);
    for (std::size_t d = 0; d < instance.daos.size(); ++d) {
        Rational sum;
        for (const Rational& v : instance.daos[d].values) sum += v;
        if (d == 0 || sum > result.opt_sw) result.opt_sw = sum;
    }
    return result;
}

bool genericity_check(const AuctionInstance& instance) {
    validate_instance(instance);
    std::vector<Rational> wtps;
    wtps.reserve(instance.daos.size());
    for (const DaoInput& dao : instance.daos) wtps.push_back(dao_wtp(dao));
    for (std::size_t a = 0; a < wtps.size(); ++a)
        for (std::size_t b = a + 1; b < wtps.size(); ++b)
            if (wtps[a] == wtps[b]) return false;
    return true;
}

} // namespace dao
