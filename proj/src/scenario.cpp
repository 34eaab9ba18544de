#include "dao/scenario.hpp"

#include "dao/errors.hpp"

#include <fstream>

namespace dao {

namespace {

using nlohmann::json;

Rational parse_nonnegative(const json& j, const char* where) {
    if (!j.is_string())
        throw parse_error(std::string(where) + " must be a string rational, got " + j.dump());
    Rational r = Rational::parse(j.get<std::string>());
    if (r.is_negative())
        throw invariant_error(std::string("scenario invariant: ") + where +
                              " must be nonnegative, got " + r.to_string());
    return r;
}

std::vector<Rational> parse_rational_list(const json& j, const char* where) {
    if (!j.is_array()) throw parse_error(std::string(where) + " must be an array");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(parse_nonnegative(item, where));
    return out;
}

} // namespace

Scenario parse_scenario(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("scenario root must be an object");
    Scenario scenario;
    if (!j.contains("version") || !j.at("version").is_string())
        throw parse_error("scenario requires a string \"version\"");
    scenario.version = j.at("version").get<std::string>();
    scenario.alpha =
        j.contains("alpha") ? parse_nonnegative(j.at("alpha"), "alpha") : Rational{0};
    if (!j.contains("daos") || !j.at("daos").is_array())
        throw parse_error("scenario requires a \"daos\" array");
    for (const auto& d : j.at("daos")) {
        if (!d.is_object()) throw parse_error("each DAO must be an object");
        ScenarioDao dao;
        dao.name = d.contains("name") ? d.at("name").get<std::string>() : "";
        if (!d.contains("values")) throw parse_error("DAO \"" + dao.name + "\" lacks values");
        dao.values = parse_rational_list(d.at("values"), "values");
        dao.bids = d.contains("bids") ? parse_rational_list(d.at("bids"), "bids") : dao.values;
        if (!d.contains("mechanism") || !d.at("mechanism").is_string())
            throw parse_error("DAO \"" + dao.name + "\" lacks a mechanism");
        dao.mechanism = mechanism_from_name(d.at("mechanism").get<std::string>());
        if (dao.values.empty())
            throw invariant_error("scenario invariant: DAO \"" + dao.name + "\" has no members");
        if (dao.bids.size() != dao.values.size())
            throw invariant_error("scenario invariant: bids length must equal values length in "
                                  "DAO \"" + dao.name + "\"");
        scenario.daos.push_back(std::move(dao));
    }
    if (scenario.daos.empty())
        throw invariant_error("scenario invariant: at least one DAO required");
    return scenario;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open scenario file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return parse_scenario(j);
}

nlohmann::json scenario_to_json(const Scenario& scenario) {
    json daos = json::array();
    for (const ScenarioDao& dao : scenario.daos) {
        json values = json::array();
        for (const Rational& v : dao.values) values.push_back(v.to_string());
        json bids = json::array();
        for (const Rational& b : dao.bids) bids.push_back(b.to_string());
        daos.push_back(json{{"name", dao.name},
                            {"mechanism", mechanism_name(dao.mechanism)},
                            {"values", values},
                            {"bids", bids}});
    }
    return json{{"version", scenario.version},
                {"alpha", scenario.alpha.to_string()},
                {"daos", daos}};
}

AuctionInstance to_instance(const Scenario& scenario) {
    AuctionInstance instance;
    for (const ScenarioDao& dao : scenario.daos) {
        DaoInput input;
        input.name = dao.name;
        input.values = dao.values;
        input.bids = dao.bids;
        input.mechanism.kind = dao.mechanism;
        input.mechanism.alpha =
            dao.mechanism == MechanismKind::collective ? scenario.alpha : Rational{0};
        instance.daos.push_back(std::move(input));
    }
    return instance;
}

} // namespace dao
