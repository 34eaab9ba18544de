#pragma once

#include "dao/collective.hpp"
#include "dao/grouping.hpp"
#include "dao/profile.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dao {

enum class MechanismKind { baseline, grouped, collective };

std::string mechanism_name(MechanismKind kind);
MechanismKind mechanism_from_name(const std::string& name); // throws parse_error

// A DAO's lower-level mechanism; alpha applies to collective only and is
// zero for the quasi-linear mechanisms.
struct MechanismSpec {
    MechanismKind kind = MechanismKind::baseline;
    Rational alpha;

    friend bool operator==(const MechanismSpec& a, const MechanismSpec& b) = default;
};

// One bidder of the upper-level auction. values/bids are in original member
// order; an individual bidder is a one-member DAO.
struct DaoInput {
    std::string name;
    std::vector<Rational> values;
    std::vector<Rational> bids;
    MechanismSpec mechanism;

    friend bool operator==(const DaoInput& a, const DaoInput& b) = default;
};

struct AuctionInstance {
    std::vector<DaoInput> daos;
    std::uint64_t seed = 0;

    friend bool operator==(const AuctionInstance& a, const AuctionInstance& b) = default;
};

void validate_instance(const AuctionInstance& instance); // throws invariant_error

struct AuctionResult {
    std::size_t winner = 0;
    Rational p_total;                           // second-highest DAO bid, 0 if single
    std::vector<Rational> wtps;                 // per-DAO aggregated bid
    std::vector<MechanismOutcome> dao_outcomes; // original member order per DAO
    Rational sw;                                // winner's welfare at true values
    Rational opt_sw;                            // max over DAOs of sum of true values
    bool critical_tie = false;                  // top WTP shared by several DAOs
};

// Aggregated bid of a DAO under its configured mechanism.
Rational dao_wtp(const DaoInput& dao);

// Lower-level allocation of a winning DAO at price p_total, returned in
// original member order.
MechanismOutcome dao_allocate(const DaoInput& dao, const Rational& p_total);

// Second-price upper mechanism across DAOs: highest aggregated bid wins and
// pays the second-highest (ties break to the lowest index and are flagged).
AuctionResult run_auction(const AuctionInstance& instance);

// Best-effort syntactic genericity: pairwise-distinct DAO WTPs.
bool genericity_check(const AuctionInstance& instance);

} // namespace dao
