#include "dao/errors.hpp"
#include "dao/report.hpp"
#include "dao/scenario.hpp"

#include <doctest.h>

using dao::MechanismKind;
using dao::Rational;
using dao::Scenario;
using nlohmann::json;

namespace {

json fig3_like() {
    return json::parse(R"({
        "version": "1",
        "alpha": "1",
        "daos": [
            {"name": "main", "mechanism": "collective",
             "values": ["100", "90", "80", "70", "60", "50", "40", "30", "20"]},
            {"name": "rival", "mechanism": "baseline", "values": ["400"]}
        ]
    })");
}

} // namespace

TEST_CASE("scenario parsing fills defaults") {
    Scenario s = dao::parse_scenario(fig3_like());
    CHECK(s.version == "1");
    CHECK(s.alpha == Rational{1});
    REQUIRE(s.daos.size() == 2);
    CHECK(s.daos[0].mechanism == MechanismKind::collective);
    CHECK(s.daos[0].bids == s.daos[0].values); // bids default to values
    CHECK(s.daos[1].values == std::vector<Rational>{Rational{400}});

    dao::AuctionInstance instance = dao::to_instance(s);
    CHECK(instance.daos[0].mechanism.alpha == Rational{1});
    CHECK(instance.daos[1].mechanism.alpha == Rational{0}); // quasi-linear rival
}

TEST_CASE("scenario parsing accepts decimals and fractions") {
    json j = json::parse(R"({
        "version": "1",
        "daos": [{"name": "d", "mechanism": "grouped", "values": ["2.5", "8/3", "1"]}]
    })");
    Scenario s = dao::parse_scenario(j);
    CHECK(s.daos[0].values[0] == Rational::parse("5/2"));
    CHECK(s.daos[0].values[1] == Rational::parse("8/3"));
    CHECK(s.alpha.is_zero()); // default
}

TEST_CASE("scenario errors carry the right category") {
    CHECK_THROWS_AS(dao::parse_scenario(json::array()), dao::parse_error);
    CHECK_THROWS_AS(dao::parse_scenario(json::parse(R"({"daos": []})")), dao::parse_error);

    json no_daos = json::parse(R"({"version": "1", "daos": []})");
    CHECK_THROWS_AS(dao::parse_scenario(no_daos), dao::invariant_error);

    json negative = fig3_like();
    negative["daos"][0]["values"][0] = "-3";
    CHECK_THROWS_AS(dao::parse_scenario(negative), dao::invariant_error);

    json mismatched = fig3_like();
    mismatched["daos"][0]["bids"] = {"1", "2"};
    CHECK_THROWS_AS(dao::parse_scenario(mismatched), dao::invariant_error);

    json unknown = fig3_like();
    unknown["daos"][0]["mechanism"] = "vickrey";
    CHECK_THROWS_AS(dao::parse_scenario(unknown), dao::parse_error);

    json bad_literal = fig3_like();
    bad_literal["daos"][0]["values"][0] = "ten";
    CHECK_THROWS_AS(dao::parse_scenario(bad_literal), dao::parse_error);
}

TEST_CASE("scenario echo round-trips") {
    Scenario s = dao::parse_scenario(fig3_like());
    json echo = dao::scenario_to_json(s);
    Scenario back = dao::parse_scenario(echo);
    CHECK(back.alpha == s.alpha);
    REQUIRE(back.daos.size() == s.daos.size());
    for (std::size_t d = 0; d < s.daos.size(); ++d) {
        CHECK(back.daos[d].values == s.daos[d].values);
        CHECK(back.daos[d].bids == s.daos[d].bids);
        CHECK(back.daos[d].mechanism == s.daos[d].mechanism);
    }
    // Canonical: serializing the round-tripped scenario is byte-identical.
    CHECK(dao::canonical_dump(echo) == dao::canonical_dump(dao::scenario_to_json(back)));
}

TEST_CASE("run report renders exact rationals and the harmonic check") {
    Scenario s = dao::parse_scenario(fig3_like());
    dao::AuctionResult result = dao::run_auction(dao::to_instance(s));
    json report = dao::run_report(s, result, false);
    CHECK(report.at("p_total") == "400");
    CHECK(report.at("winner_name") == "main");
    CHECK(report.at("daos")[0]["wtp"] == "460");
    CHECK(report.at("daos")[0]["members"][5]["x"] == "25/28"); // 50/56 reduced
    CHECK(report.at("h_ell_bound_holds") == true);
    CHECK(report.find("approx_note") == report.end());

    json approx = dao::run_report(s, result, true);
    CHECK(approx.at("daos")[0]["members"][5].contains("x_approx"));

    std::string csv = dao::run_report_csv(s, result, false);
    CHECK(csv.find("dao,name,member,value,bid,x,p") != std::string::npos);
    CHECK(csv.find("0,main,5,50,50,25/28,50") != std::string::npos);

    // Determinism: two renders are byte-identical.
    CHECK(dao::canonical_dump(report) ==
          dao::canonical_dump(dao::run_report(s, dao::run_auction(dao::to_instance(s)), false)));
}
