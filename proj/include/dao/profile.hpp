#pragma once

#include "dao/rational.hpp"

#include <cstddef>
#include <vector>

namespace dao {

// A DAO's member bids held in non-increasing order, with the stable
// permutation back to the original member ids. Immutable once built.
class BidProfile {
public:
    std::size_t size() const { return bids_.size(); }

    // Non-increasing.
    const std::vector<Rational>& bids() const { return bids_; }
    const Rational& bid(std::size_t rank) const { return bids_[rank]; }

    // rank (0-based, 0 = highest bid) -> original member id.
    std::size_t original_index(std::size_t rank) const { return order_[rank]; }
    // original member id -> rank.
    std::size_t rank_of(std::size_t original) const { return inverse_[original]; }
    const std::vector<std::size_t>& order() const { return order_; }

    friend BidProfile make_profile(std::vector<Rational> raw_bids);

private:
    std::vector<Rational> bids_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> inverse_;
};

// Sorts non-increasingly with a stable permutation (ties keep the original
// relative member order). Throws invariant_error on an empty list or any
// negative bid.
BidProfile make_profile(std::vector<Rational> raw_bids);

// Per-member access and payment, plus the DAO-level allocation and price.
// Vectors are indexed consistently with whatever order produced them
// (mechanisms produce rank order; unsort() maps back to member ids).
struct MechanismOutcome {
    std::vector<Rational> x;
    std::vector<Rational> p;
    bool won = false;       // X_total
    Rational p_total;

    friend bool operator==(const MechanismOutcome& a, const MechanismOutcome& b) = default;
};

// Checks the outcome invariants: sizes match, 0 <= x_i <= 1, losing outcomes
// are all-zero, and payments sum to p_total exactly when won.
// Throws invariant_error naming the violated invariant.
void validate_outcome(const MechanismOutcome& outcome);

// Re-expresses a rank-ordered outcome in original member-id order via the
// profile's stored permutation. Throws invariant_error on length mismatch.
MechanismOutcome unsort(const MechanismOutcome& outcome, const BidProfile& profile);

} // namespace dao
