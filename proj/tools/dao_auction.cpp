// Command-line front end: scenario runs, the grouping and parameter
// algorithms on ad-hoc inputs, and the verification suites.
//
// Exit codes: 0 success (for verify: all checks pass), 1 parse error or
// unknown suite, 2 invariant violation, 3 losing price.

#include "dao/baseline.hpp"
#include "dao/errors.hpp"
#include "dao/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::vector<dao::Rational> parse_value_args(const std::vector<std::string>& args) {
    std::vector<dao::Rational> values;
    values.reserve(args.size());
    for (const std::string& a : args) {
        dao::Rational v = dao::Rational::parse(a);
        if (v.is_negative()) throw dao::invariant_error("negative value: " + a);
        values.push_back(std::move(v));
    }
    return values;
}

unsigned thread_cap_from_env() {
    const char* env = std::getenv("DAO_AUCTION_THREADS");
    if (!env || !*env) return 0;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (!end || *end != '\0') throw dao::parse_error("DAO_AUCTION_THREADS must be an integer");
    return static_cast<unsigned>(v);
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Two-level DAO public-good auction mechanisms"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string format = "json";
    bool approx = false;

    CLI::App* run = app.add_subcommand("run", "Run the auction described by a scenario file");
    run->add_option("scenario", scenario_path, "Scenario JSON path")->required();
    run->add_option("--format", format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    run->add_flag("--approx", approx, "Add rounded decimal convenience fields");

    std::vector<std::string> value_args;
    std::string group_scenario;
    std::size_t group_dao = 0;
    CLI::App* group = app.add_subcommand("group", "Optimal subgrouping of a value list");
    group->add_option("values", value_args, "Member values, e.g. 100 90 80 or 8/3");
    group->add_option("--scenario", group_scenario, "Take values from a scenario file instead");
    group->add_option("--dao", group_dao, "DAO index within the scenario (default 0)");
    group->add_flag("--approx", approx, "Add rounded decimal convenience fields");

    std::vector<std::string> bid_args;
    std::string p_total_arg, alpha_arg = "0";
    CLI::App* params = app.add_subcommand("params", "Optimal collective parameters for bids");
    params->add_option("bids", bid_args, "Member bids")->required();
    params->add_option("--p-total", p_total_arg, "Total price charged to the DAO")->required();
    params->add_option("--alpha", alpha_arg, "Collective factor (default 0)");
    params->add_flag("--approx", approx, "Add rounded decimal convenience fields");

    std::string suite;
    std::uint64_t seed = 1;
    std::size_t instances = 200;
    std::size_t max_size = 8;
    CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
    verify->add_option("suite", suite, "Suite name, or \"all\"")->required();
    verify->add_option("--seed", seed, "Generator seed");
    verify->add_option("-n,--instances", instances, "Instances to generate");
    verify->add_option("--max-size", max_size, "Largest DAO size to generate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (run->parsed()) {
        dao::Scenario scenario = dao::load_scenario_file(scenario_path);
        dao::AuctionResult result = dao::run_auction(dao::to_instance(scenario));
        if (format == "csv") {
            std::cout << dao::run_report_csv(scenario, result, approx);
        } else {
            std::cout << dao::canonical_dump(dao::run_report(scenario, result, approx));
        }
        return 0;
    }

    if (group->parsed()) {
        std::vector<dao::Rational> values;
        if (!group_scenario.empty()) {
            if (!value_args.empty())
                throw dao::parse_error("group: pass either values or --scenario, not both");
            dao::Scenario scenario = dao::load_scenario_file(group_scenario);
            if (group_dao >= scenario.daos.size())
                throw dao::invariant_error("group: DAO index out of range");
            values = scenario.daos[group_dao].values;
        } else if (!value_args.empty()) {
            values = parse_value_args(value_args);
        } else {
            throw dao::parse_error("group: values or --scenario required");
        }
        dao::OptimalGroupingResult result = dao::optimal_grouping(dao::make_profile(values));
        std::cout << dao::canonical_dump(dao::group_report(values, result, approx));
        return 0;
    }

    if (params->parsed()) {
        std::vector<dao::Rational> bids = parse_value_args(bid_args);
        dao::Rational p_total = dao::Rational::parse(p_total_arg);
        dao::Rational alpha = dao::Rational::parse(alpha_arg);
        if (!(p_total > dao::Rational{0}))
            throw dao::invariant_error("params: P_total must be positive");
        dao::BidProfile profile = dao::make_profile(bids);
        dao::FeasibleParams fp = dao::optimal_parameters(profile, p_total, alpha);
        dao::MechanismOutcome sorted_outcome = dao::allocate_collective(profile, fp);
        dao::MechanismOutcome outcome = dao::unsort(sorted_outcome, profile);
        std::cout << dao::canonical_dump(dao::params_report(
            bids, p_total, fp, outcome, dao::wtp_collective(profile, alpha), approx));
        return 0;
    }

    // verify
    dao::SuiteConfig config;
    config.seed = seed;
    config.instances = instances;
    config.max_size = max_size;
    config.threads = thread_cap_from_env();

    std::vector<std::string> selected;
    if (suite == "all") {
        selected = dao::suite_names();
    } else {
        selected.push_back(suite);
    }
    bool all_pass = true;
    nlohmann::json reports = nlohmann::json::array();
    for (const std::string& name : selected) {
        config.suite = name;
        dao::SuiteReport report;
        try {
            report = dao::theorem_suite(config);
        } catch (const dao::invariant_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1; // unknown suite
        }
        all_pass = all_pass && report.pass;
        reports.push_back(dao::verify_report(report));
    }
    if (reports.size() == 1) {
        std::cout << dao::canonical_dump(reports.front());
    } else {
        std::cout << dao::canonical_dump(
            nlohmann::json{{"format", "dao-auction/verify-report-set/v1"}, {"reports", reports}});
    }
    return all_pass ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const dao::losing_price_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dao::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const dao::invariant_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
