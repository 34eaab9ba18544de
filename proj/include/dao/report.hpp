#pragma once

#include "dao/grouping.hpp"
#include "dao/scenario.hpp"
#include "dao/suites.hpp"

#include <json.hpp>

#include <string>

namespace dao {

// Reports are canonical: keys sorted (nlohmann objects are ordered maps),
// every rational rendered as "num/den" (integers without "/1"), no floats.
// Identical inputs therefore serialize byte-identically.

nlohmann::json run_report(const Scenario& scenario, const AuctionResult& result, bool approx);
std::string run_report_csv(const Scenario& scenario, const AuctionResult& result, bool approx);

nlohmann::json group_report(const std::vector<Rational>& values,
                            const OptimalGroupingResult& result, bool approx);

nlohmann::json params_report(const std::vector<Rational>& bids, const Rational& p_total,
                             const FeasibleParams& params, const MechanismOutcome& outcome,
                             const Rational& wtp, bool approx);

nlohmann::json verify_report(const SuiteReport& report);

// dump(2) plus a trailing newline.
std::string canonical_dump(const nlohmann::json& j);

} // namespace dao
