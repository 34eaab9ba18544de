#include "dao/report.hpp"

#include "dao/baseline.hpp"

#include <algorithm>
#include <sstream>

namespace dao {

namespace {

using nlohmann::json;

json rational_list(const std::vector<Rational>& vs) {
    json arr = json::array();
    for (const Rational& v : vs) arr.push_back(v.to_string());
    return arr;
}

} // namespace

std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json run_report(const Scenario& scenario, const AuctionResult& result, bool approx) {
    json daos = json::array();
    for (std::size_t d = 0; d < scenario.daos.size(); ++d) {
        const ScenarioDao& dao = scenario.daos[d];
        const MechanismOutcome& outcome = result.dao_outcomes[d];
        json members = json::array();
        for (std::size_t i = 0; i < dao.values.size(); ++i) {
            json m{{"member", i},
                   {"value", dao.values[i].to_string()},
                   {"bid", dao.bids[i].to_string()},
                   {"x", outcome.x[i].to_string()},
                   {"p", outcome.p[i].to_string()}};
            if (approx) {
                m["x_approx"] = outcome.x[i].to_decimal_string();
                m["p_approx"] = outcome.p[i].to_decimal_string();
            }
            members.push_back(std::move(m));
        }
        daos.push_back(json{{"name", dao.name},
                            {"mechanism", mechanism_name(dao.mechanism)},
                            {"wtp", result.wtps[d].to_string()},
                            {"won", d == result.winner},
                            {"members", std::move(members)}});
    }

    std::size_t ell = 0;
    for (const ScenarioDao& dao : scenario.daos) ell = std::max(ell, dao.values.size());

    json report{{"format", "dao-auction/run-report/v1"},
                {"scenario", scenario_to_json(scenario)},
                {"winner", result.winner},
                {"winner_name", scenario.daos[result.winner].name},
                {"p_total", result.p_total.to_string()},
                {"critical_tie", result.critical_tie},
                {"sw", result.sw.to_string()},
                {"opt_sw", result.opt_sw.to_string()},
                {"h_ell", harmonic_number(ell).to_string()},
                {"h_ell_bound_holds", harmonic_bound_check(result.opt_sw, result.sw, ell)},
                {"daos", std::move(daos)}};
    if (approx) report["approx_note"] = "decimal fields are rounded; rationals are authoritative";
    return report;
}

std::string run_report_csv(const Scenario& scenario, const AuctionResult& result, bool approx) {
    std::ostringstream out;
    out << "# format=dao-auction/run-report-csv/v1\n";
    out << "# winner=" << result.winner << " winner_name=" << scenario.daos[result.winner].name
        << "\n";
    out << "# p_total=" << result.p_total.to_string() << " sw=" << result.sw.to_string()
        << " opt_sw=" << result.opt_sw.to_string() << "\n";
    out << "dao,name,member,value,bid,x,p";
    if (approx) out << ",x_approx,p_approx";
    out << "\n";
    for (std::size_t d = 0; d < scenario.daos.size(); ++d) {
        const ScenarioDao& dao = scenario.daos[d];
        const MechanismOutcome& outcome = result.dao_outcomes[d];
        for (std::size_t i = 0; i < dao.values.size(); ++i) {
            out << d << ',' << dao.name << ',' << i << ',' << dao.values[i].to_string() << ','
                << dao.bids[i].to_string() << ',' << outcome.x[i].to_string() << ','
                << outcome.p[i].to_string();
            if (approx)
                out << ',' << outcome.x[i].to_decimal_string() << ','
                    << outcome.p[i].to_decimal_string();
            out << "\n";
        }
    }
    return out.str();
}

nlohmann::json group_report(const std::vector<Rational>& values,
                            const OptimalGroupingResult& result, bool approx) {
    json intervals = json::array();
    for (const auto& sub : result.grouping.subgroups) {
        intervals.push_back(json::array({sub.front() + 1, sub.back() + 1}));
    }
    json premerge = json::array();
    for (std::size_t s : result.premerge_sizes) premerge.push_back(s);
    json report{{"format", "dao-auction/group-report/v1"},
                {"values", rational_list(values)},
                {"ungrouped_wtp", wtp_baseline(make_profile(values)).value.to_string()},
                {"opt_wtp", result.opt_wtp.to_string()},
                {"k", result.grouping.subgroups.size()},
                {"intervals", std::move(intervals)},
                {"critical_index", result.eval.critical_index},
                {"critical_value", result.eval.critical_value.to_string()},
                {"subgroup_wtps", rational_list(result.eval.subgroup_wtps)},
                {"premerge_sizes", std::move(premerge)}};
    if (approx) report["opt_wtp_approx"] = result.opt_wtp.to_decimal_string();
    return report;
}

nlohmann::json params_report(const std::vector<Rational>& bids, const Rational& p_total,
                             const FeasibleParams& params, const MechanismOutcome& outcome,
                             const Rational& wtp, bool approx) {
    json members = json::array();
    for (std::size_t i = 0; i < bids.size(); ++i) {
        json m{{"bid", bids[i].to_string()},
               {"x", outcome.x[i].to_string()},
               {"p", outcome.p[i].to_string()}};
        if (approx) {
            m["x_approx"] = outcome.x[i].to_decimal_string();
            m["p_approx"] = outcome.p[i].to_decimal_string();
        }
        members.push_back(std::move(m));
    }
    return json{{"format", "dao-auction/params-report/v1"},
                {"alpha", params.alpha.to_string()},
                {"p_total", p_total.to_string()},
                {"wtp", wtp.to_string()},
                {"p1", params.p1.to_string()},
                {"p2", params.p2.to_string()},
                {"k1", params.k1},
                {"k2", params.k2},
                {"members", std::move(members)}};
}

nlohmann::json verify_report(const SuiteReport& report) {
    json counterexamples = json::array();
    for (const Counterexample& ce : report.counterexamples) {
        counterexamples.push_back(
            json{{"instance_id", ce.instance_id}, {"message", ce.message}, {"data", ce.data}});
    }
    return json{{"format", "dao-auction/verify-report/v1"},
                {"suite", report.suite},
                {"seed", report.seed},
                {"instances", report.instances_run},
                {"violations", report.violations},
                {"pass", report.pass},
                {"expects_witness", report.expects_witness},
                {"counterexamples", std::move(counterexamples)}};
}

} // namespace dao
