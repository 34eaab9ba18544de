#include "dao/profile.hpp"

#include "dao/errors.hpp"

#include <algorithm>
#include <numeric>

namespace dao {

BidProfile make_profile(std::vector<Rational> raw_bids) {
    if (raw_bids.empty()) throw invariant_error("make_profile: empty bid list");
    for (const Rational& b : raw_bids) {
        if (b.is_negative()) throw invariant_error("make_profile: negative bid " + b.to_string());
    }
    BidProfile p;
    p.order_.resize(raw_bids.size());
    std::iota(p.order_.begin(), p.order_.end(), std::size_t{0});
    std::stable_sort(p.order_.begin(), p.order_.end(), [&](std::size_t a, std::size_t b) {
        return raw_bids[a] > raw_bids[b];
    });
    p.bids_.reserve(raw_bids.size());
    for (std::size_t id : p.order_) p.bids_.push_back(raw_bids[id]);
    p.inverse_.resize(raw_bids.size());
    for (std::size_t rank = 0; rank < p.order_.size(); ++rank) p.inverse_[p.order_[rank]] = rank;
    return p;
}

void validate_outcome(const MechanismOutcome& outcome) {
    if (outcome.x.size() != outcome.p.size())
        throw invariant_error("outcome: x/p length mismatch");
    const Rational one{1};
    for (const Rational& xi : outcome.x) {
        if (xi.is_negative() || xi > one)
            throw invariant_error("outcome: access outside [0,1]: " + xi.to_string());
    }
    Rational paid;
    for (const Rational& pi : outcome.p) paid += pi;
    if (!outcome.won) {
        for (const Rational& xi : outcome.x)
            if (!xi.is_zero()) throw invariant_error("outcome: access granted without winning");
        if (!paid.is_zero()) throw invariant_error("outcome: payment collected without winning");
        return;
    }
    if (paid != outcome.p_total)
        throw invariant_error("outcome: budget balance violated, paid " + paid.to_string() +
                              " vs P_total " + outcome.p_total.to_string());
}

MechanismOutcome unsort(const MechanismOutcome& outcome, const BidProfile& profile) {
    if (outcome.x.size() != profile.size() || outcome.p.size() != profile.size())
        throw invariant_error("unsort: outcome/profile length mismatch");
    MechanismOutcome out;
    out.won = outcome.won;
    out.p_total = outcome.p_total;
    out.x.resize(profile.size());
    out.p.resize(profile.size());
    for (std::size_t rank = 0; rank < profile.size(); ++rank) {
        std::size_t id = profile.original_index(rank);
        out.x[id] = outcome.x[rank];
        out.p[id] = outcome.p[rank];
    }
    return out;
}

} // namespace dao
