#pragma once

#include "dao/auction.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dao {

// On-disk scenario: a versioned list of DAOs with exact rational values,
// optional bids (default: truthful) and a mechanism each; one shared
// collective factor. Values accept decimal ("2.5") and fraction ("8/3") forms.
struct ScenarioDao {
    std::string name;
    std::vector<Rational> values;
    std::vector<Rational> bids;
    MechanismKind mechanism = MechanismKind::baseline;
};

struct Scenario {
    std::string version;
    Rational alpha;
    std::vector<ScenarioDao> daos;
};

// Throws parse_error for malformed JSON or literals, invariant_error for
// violated scenario invariants (negative rationals, length mismatches,
// empty DAO lists, unknown mechanisms).
Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario_file(const std::string& path);

// Canonical echo: rationals re-rendered as "num/den" strings, keys sorted.
nlohmann::json scenario_to_json(const Scenario& scenario);

AuctionInstance to_instance(const Scenario& scenario);

} // namespace dao
