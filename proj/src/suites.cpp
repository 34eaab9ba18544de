#include "dao/suites.hpp"

#include "dao/baseline.hpp"
#include "dao/deviation.hpp"
#include "dao/errors.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace dao {

namespace {

using nlohmann::json;

Rational rat(std::size_t v) { return Rational{static_cast<long long>(v)}; }

// ----------------------------------------------------------------------------
// Case payloads. Every suite serializes its inputs into one shape so that a
// counterexample can be replayed standalone.

struct SuiteCase {
    std::vector<Rational> values;
    Rational p_total;
    Rational p_high;
    Rational alpha;
    Rational aux_value;       // suite-specific scalar (thm2: value bump)
    std::size_t aux_index = 0; // suite-specific index (thm2: bumped member)
    std::size_t fig_case = 0;
    AuctionInstance instance;
    bool has_instance = false;
};

json rationals_to_json(const std::vector<Rational>& vs) {
    json arr = json::array();
    for (const Rational& v : vs) arr.push_back(v.to_string());
    return arr;
}

std::vector<Rational> rationals_from_json(const json& arr) {
    std::vector<Rational> out;
    for (const auto& v : arr) out.push_back(Rational::parse(v.get<std::string>()));
    return out;
}

json instance_to_json(const AuctionInstance& instance) {
    json daos = json::array();
    for (const DaoInput& dao : instance.daos) {
        daos.push_back(json{{"name", dao.name},
                            {"mechanism", mechanism_name(dao.mechanism.kind)},
                            {"alpha", dao.mechanism.alpha.to_string()},
                            {"values", rationals_to_json(dao.values)},
                            {"bids", rationals_to_json(dao.bids)}});
    }
    return json{{"daos", daos}, {"seed", instance.seed}};
}

AuctionInstance instance_from_json(const json& j) {
    AuctionInstance instance;
    instance.seed = j.value("seed", std::uint64_t{0});
    for (const auto& d : j.at("daos")) {
        DaoInput dao;
        dao.name = d.value("name", "");
        dao.mechanism.kind = mechanism_from_name(d.at("mechanism").get<std::string>());
        dao.mechanism.alpha = Rational::parse(d.at("alpha").get<std::string>());
        dao.values = rationals_from_json(d.at("values"));
        dao.bids = rationals_from_json(d.at("bids"));
        instance.daos.push_back(std::move(dao));
    }
    return instance;
}

json case_to_json(const SuiteCase& c) {
    json j;
    if (!c.values.empty()) j["values"] = rationals_to_json(c.values);
    j["p_total"] = c.p_total.to_string();
    j["p_high"] = c.p_high.to_string();
    j["alpha"] = c.alpha.to_string();
    j["aux_value"] = c.aux_value.to_string();
    j["aux_index"] = c.aux_index;
    j["fig_case"] = c.fig_case;
    if (c.has_instance) j["instance"] = instance_to_json(c.instance);
    return j;
}

SuiteCase case_from_json(const json& j) {
    SuiteCase c;
    if (j.contains("values")) c.values = rationals_from_json(j.at("values"));
    c.p_total = Rational::parse(j.value("p_total", "0"));
    c.p_high = Rational::parse(j.value("p_high", "0"));
    c.alpha = Rational::parse(j.value("alpha", "0"));
    c.aux_value = Rational::parse(j.value("aux_value", "0"));
    c.aux_index = j.value("aux_index", std::size_t{0});
    c.fig_case = j.value("fig_case", std::size_t{0});
    if (j.contains("instance")) {
        c.instance = instance_from_json(j.at("instance"));
        c.has_instance = true;
    }
    return c;
}

// ----------------------------------------------------------------------------
// Shared check helpers.

std::optional<std::string> fail(std::string msg) { return std::optional<std::string>(std::move(msg)); }

const std::optional<std::string> ok = std::nullopt;

// ----------------------------------------------------------------------------
// thm2: oracle equivalence of the optimal grouping algorithm against both
// brute-force enumerations, plus internal consistency and value monotonicity.

SuiteCase gen_thm2(SuiteRng& rng, const SuiteConfig& config) {
    SuiteCase c;
    std::size_t n = rng.in(1, std::min<std::size_t>(std::max<std::size_t>(config.max_size, 1), 8));
    // Every third case draws from a tiny range to force ties.
    if (rng.below(3) == 0) {
        c.values.reserve(n);
        for (std::size_t i = 0; i < n; ++i) c.values.push_back(rat(rng.in(1, 5)));
    } else {
        c.values = random_values(rng, n, false);
    }
    // A seeded bump for the monotonicity side-check.
    c.aux_value = rat(rng.in(1, 50));
    c.aux_index = rng.below(n);
    return c;
}

std::optional<std::string> check_thm2(const SuiteCase& c) {
    BidProfile profile = make_profile(c.values);
    OptimalGroupingResult og = optimal_grouping(profile);
    if (!og.grouping.is_continuous()) return fail("output grouping has a crossing");
    if (!og.grouping.is_partition_of(profile.size()))
        return fail("output grouping is not a partition");
    if (og.eval.wtp_total != og.opt_wtp)
        return fail("reported opt_WTP " + og.opt_wtp.to_string() +
                    " != evaluation of output grouping " + og.eval.wtp_total.to_string());
    if (og.opt_wtp < wtp_baseline(profile).value)
        return fail("opt_WTP below the degenerate grouping's WTP");

    Rational best_all;
    for_each_grouping(profile.size(), [&](const Grouping& g) {
        Rational w = evaluate_grouping(profile, g).wtp_total;
        if (w > best_all) best_all = w;
        return true;
    });
    Rational best_continuous;
    for_each_continuous_grouping(profile.size(), [&](const Grouping& g) {
        Rational w = evaluate_grouping(profile, g).wtp_total;
        if (w > best_continuous) best_continuous = w;
        return true;
    });
    if (best_all != best_continuous)
        return fail("continuous maximum " + best_continuous.to_string() +
                    " != all-partitions maximum " + best_all.to_string());
    if (og.opt_wtp != best_all)
        return fail("algorithm value " + og.opt_wtp.to_string() + " != brute-force maximum " +
                    best_all.to_string());

    // Raising a single value never lowers the optimum.
    std::vector<Rational> bumped = c.values;
    bumped[c.aux_index] += c.aux_value;
    if (optimal_grouping(make_profile(bumped)).opt_wtp < og.opt_wtp)
        return fail("opt_WTP decreased after raising one value");
    return ok;
}

// ----------------------------------------------------------------------------
// thm3: the optimal grouping's two-level allocation grants access to a
// superset of the degenerate allocation's access set.

SuiteCase gen_thm3(SuiteRng& rng, const SuiteConfig& config) {
    SuiteCase c;
    std::size_t n = rng.in(1, std::max<std::size_t>(config.max_size, 2));
    c.values = random_values(rng, n, false);
    c.p_total = random_winning_price(rng, wtp_baseline(make_profile(c.values)).value);
    return c;
}

std::optional<std::string> check_thm3(const SuiteCase& c) {
    BidProfile profile = make_profile(c.values);
    MechanismOutcome degenerate = allocate_baseline(profile, c.p_total);
    OptimalGroupingResult og = optimal_grouping(profile);
    MechanismOutcome grouped = two_level_allocation(profile, og.grouping, c.p_total);
    for (std::size_t rank = 0; rank < profile.size(); ++rank) {
        if (degenerate.x[rank] == Rational{1} && grouped.x[rank] != Rational{1})
            return fail("member rank " + std::to_string(rank) +
                        " lost access under the optimal grouping");
    }
    Excludability cmp = compare_excludability(grouped.x, degenerate.x);
    if (cmp != Excludability::less_excludable && cmp != Excludability::equal)
        return fail("grouped allocation is not pointwise >= the degenerate one");
    return ok;
}

// ----------------------------------------------------------------------------
// lemma1: greedy pre-merge subgroup sizes are non-decreasing.

SuiteCase gen_lemma1(SuiteRng& rng, const SuiteConfig& config) {
    SuiteCase c;
    std::size_t n = rng.in(1, std::max<std::size_t>(config.max_size * 2, 2));
    c.values = random_values(rng, n, rng.below(2) == 0);
    return c;
}

std::optional<std::string> check_lemma1(const SuiteCase& c) {
    OptimalGroupingResult og = optimal_grouping(make_profile(c.values));
    for (std::size_t j = 1; j < og.premerge_sizes.size(); ++j) {
        if (og.premerge_sizes[j] < og.premerge_sizes[j - 1])
            return fail("pre-merge sizes not monotone at subgroup " + std::to_string(j));
    }
    return ok;
}

// ----------------------------------------------------------------------------
// lemma2: the feasible-parameter list is strictly monotone and dominant.

SuiteCase gen_lemma2(SuiteRng& rng, const SuiteConfig& config) {
    SuiteCase c;
    std::size_t n = rng.in(1, std::max<std::size_t>(config.max_size, 2));
    c.values = random_values(rng, n, rng.below(2) == 0);
    c.alpha = random_alpha(rng);
    c.p_total = random_winning_price(rng, wtp_collective(make_profile(c.values), c.alpha));
    return c;
}

std::optional<std::string> check_lemma2(const SuiteCase& c) {
    BidProfile profile = make_profile(c.values);
    std::vector<FeasibleParams> feasible = enumerate_feasible_params(profile, c.p_total, c.alpha);
    if (feasible.empty()) return fail("no feasible parameters despite a winning price");
    FeasibleParams chosen = optimal_parameters(profile, c.p_total, c.alpha);
    if (!(feasible.front() == chosen))
        return fail("widest feasible parameters differ from the algorithm's output");

    std::vector<MechanismOutcome> allocations;
    allocations.reserve(feasible.size());
    for (const FeasibleParams& params : feasible)
        allocations.push_back(allocate_collective(profile, params));

    for (std::size_t j = 0; j + 1 < feasible.size(); ++j) {
        const FeasibleParams& wide = feasible[j];
        const FeasibleParams& narrow = feasible[j + 1];
        if (!(narrow.k2 < wide.k2)) return fail("k2 not strictly decreasing");
        if (!(narrow.p1 > wide.p1)) return fail("P1 not strictly increasing as k2 drops");
        if (!(narrow.p2 > wide.p2)) return fail("P2 not strictly increasing as k2 drops");
        if (!(narrow.k1 < wide.k1)) return fail("k1 not strictly decreasing as k2 drops");
        for (std::size_t i = 0; i < profile.size(); ++i) {
            if (allocations[j].x[i] < allocations[j + 1].x[i])
                return fail("allocation not pointwise ordered at member rank " +
                            std::to_string(i));
            ExtendedValue u_wide = member_utility(i, profile.bids(), allocations[j], c.alpha);
            ExtendedValue u_narrow =
                member_utility(i, profile.bids(), allocations[j + 1], c.alpha);
            if (u_wide < u_narrow)
                return fail("utility not ordered at member rank " + std::to_string(i));
        }
    }
    return ok;
}

// ----------------------------------------------------------------------------
// thm4: IR, BB, ET, uniform pricing and dominance over the baseline.

SuiteCase gen_thm4(SuiteRng& rng, const SuiteConfig& config) {
    SuiteCase c;
    std::size_t n = rng.in(1, std::max<std::size_t>(config.max_size, 2));
    c.values = random_values(rng, n, true);
    // Half the cases plant an exact duplicate so equal treatment is exercised.
    if (n >= 2 && rng.below(2) == 0) {
        std::size_t from = rng.below(n), to = rng.below(n);
        if (from != to) c.values[to] = c.values[from];
    }
    c.alpha = random_alpha(rng);
    BidProfile profile = make_profile(c.values);
    c.p_total = random_winning_price(rng, wtp_baseline(profile).value);
    c.p_high = random_winning_price(rng, wtp_collective(profile, c.alpha));
    return c;
}

std::optional<std::string> check_thm4_at_price(const BidProfile& profile, const Rational& price,
                                               const Rational& alpha) {
    FeasibleParams params = optimal_parameters(profile, price, alpha);
    MechanismOutcome out = allocate_collective(profile, params);
    validate_outcome(out);
    if (out.p_total != price)
        return fail("budget balance: collected " + out.p_total.to_string() + " at price " +
                    price.to_string());
    const ExtendedValue zero{Rational{0}};
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (member_utility(i, profile.bids(), out, alpha) < zero)
            return fail("individual rationality violated at member rank " + std::to_string(i));
        if (out.x[i] * params.p1 != out.p[i])
            return fail("uniform pricing violated at member rank " + std::to_string(i));
        for (std::size_t j = i + 1; j < profile.size(); ++j) {
            if (profile.bid(i) == profile.bid(j) &&
                (out.x[i] != out.x[j] || out.p[i] != out.p[j]))
                return fail("equal treatment violated between ranks " + std::to_string(i) +
                            " and " + std::to_string(j));
        }
    }
    return ok;
}

std::optional<std::string> check_thm4(const SuiteCase& c) {
    BidProfile profile = make_profile(c.values);
    Rational wtp_base = wtp_baseline(profile).value;
    Rational wtp_coll = wtp_collective(profile, c.alpha);
    if (wtp_coll < wtp_base) return fail("collective WTP below baseline WTP");

    if (auto v = check_thm4_at_price(profile, c.p_total, c.alpha)) return v;
    if (auto v = check_thm4_at_price(profile, c.p_high, c.alpha)) return v;

    // Dominance against the baseline allocation at a price both can win.
    MechanismOutcome base = allocate_baseline(profile, c.p_total);
    MechanismOutcome coll =
        allocate_collective(profile, optimal_parameters(profile, c.p_total, c.alpha));
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (coll.x[i] < base.x[i])
            return fail("allocation dominance violated at member rank " + std::to_string(i));
    }
    if (social_welfare(profile.bids(), coll.x) < social_welfare(profile.bids(), base.x))
        return fail("social welfare dominance violated");

    // Monotonicity of the aggregation in alpha.
    if (wtp_collective(profile, c.alpha + Rational{1}) < wtp_coll)
        return fail("collective WTP decreased as alpha grew");
    return ok;
}

// ----------------------------------------------------------------------------
// hl: the harmonic approximation bound under truthful bids.

SuiteCase gen_hl(SuiteRng& rng, const SuiteConfig& config) {
    SuiteCase c;
    c.has_instance = true;
    std::size_t m = rng.in(1, 3);
    for (std::size_t d = 0; d < m; ++d) {
        DaoInput dao;
        dao.name = "dao" + std::to_string(d);
        dao.values = random_values(rng, rng.in(1, std::max<std::size_t>(config.max_size, 2)),
                                   false);
        dao.bids = dao.values;
        dao.mechanism = {MechanismKind::baseline, Rational{0}};
        c.instance.daos.push_back(std::move(dao));
    }
    return c;
}

std::optional<std::string> check_hl(const SuiteCase& c) {
    AuctionResult result = run_auction(c.instance);
    std::size_t ell = 0;
    for (const DaoInput& dao : c.instance.daos) ell = std::max(ell, dao.values.size());
    if (!harmonic_bound_check(result.opt_sw, result.sw, ell))
        return fail("OPT_SW " + result.opt_sw.to_string() + " exceeds H_" + std::to_string(ell) +
                    " * SW with SW " + result.sw.to_string());
    return ok;
}

// ----------------------------------------------------------------------------
// alpha0: the collective mechanism at alpha = 0 equals the baseline.

SuiteCase gen_alpha0(SuiteRng& rng, const SuiteConfig& config) {
    SuiteCase c;
    std::size_t n = rng.in(1, std::max<std::size_t>(config.max_size, 2));
    c.values = random_values(rng, n, rng.below(2) == 0);
    c.p_total = random_winning_price(rng, wtp_baseline(make_profile(c.values)).value);
    return c;
}

std::optional<std::string> check_alpha0(const SuiteCase& c) {
    BidProfile profile = make_profile(c.values);
    const Rational zero{0};
    if (wtp_collective(profile, zero) != wtp_baseline(profile).value)
        return fail("alpha = 0 aggregation differs from the baseline WTP");
    MechanismOutcome base = allocate_baseline(profile, c.p_total);
    MechanismOutcome coll =
        allocate_collective(profile, optimal_parameters(profile, c.p_total, zero));
    if (!(base == coll)) return fail("alpha = 0 outcome differs from the baseline outcome");
    return ok;
}

// ----------------------------------------------------------------------------
// bb: exact budget balance for all three allocation rules at one price.

SuiteCase gen_bb(SuiteRng& rng, const SuiteConfig& config) {
    SuiteCase c;
    std::size_t n = rng.in(1, std::max<std::size_t>(config.max_size, 2));
    c.values = random_values(rng, n, rng.below(2) == 0);
    c.alpha = random_alpha(rng);
    // A price every mechanism can win: baseline WTP bounds the other two.
    c.p_total = random_winning_price(rng, wtp_baseline(make_profile(c.values)).value);
    return c;
}

std::optional<std::string> check_bb(const SuiteCase& c) {
    BidProfile profile = make_profile(c.values);
    auto residual = [&](const MechanismOutcome& out, const char* what)
        -> std::optional<std::string> {
        Rational paid;
        for (const Rational& p : out.p) paid += p;
        if (paid != c.p_total)
            return fail(std::string(what) + ": residual " + (paid - c.p_total).to_string());
        validate_outcome(out);
        return ok;
    };
    if (auto v = residual(allocate_baseline(profile, c.p_total), "baseline")) return v;
    OptimalGroupingResult og = optimal_grouping(profile);
    if (auto v = residual(two_level_allocation(profile, og.grouping, c.p_total), "grouped"))
        return v;
    MechanismOutcome coll =
        allocate_collective(profile, optimal_parameters(profile, c.p_total, c.alpha));
    if (auto v = residual(coll, "collective")) return v;
    return ok;
}

// ----------------------------------------------------------------------------
// ic-m1: no strictly profitable deviation on the breakpoint-augmented grid.

SuiteCase gen_ic_m1(SuiteRng& rng, const SuiteConfig& config) {
    SuiteCase c;
    c.has_instance = true;
    for (int attempt = 0; attempt < 100; ++attempt) {
        c.instance.daos.clear();
        DaoInput dao;
        dao.name = "collective";
        dao.values = random_values(rng, rng.in(2, std::max<std::size_t>(
                                                     std::min<std::size_t>(config.max_size, 5), 2)),
                                   true);
        dao.bids = dao.values;
        dao.mechanism = {MechanismKind::collective, random_alpha(rng)};
        c.instance.daos.push_back(dao);

        Rational wtp = dao_wtp(dao);
        DaoInput rival;
        rival.name = "rival";
        rival.values = {wtp * rat(rng.in(32, 128)) / rat(64) +
                        Rational{static_cast<long long>(rng.in(1, 999999)), BigInt{1000000}}};
        rival.bids = rival.values;
        rival.mechanism = {MechanismKind::baseline, Rational{0}};
        c.instance.daos.push_back(rival);
        if (genericity_check(c.instance)) return c;
    }
    return c; // non-generic draw survives; the check flags it honestly
}

std::optional<std::string> check_ic_m1(const SuiteCase& c) {
    if (!genericity_check(c.instance)) return fail("instance is not generic");
    const DaoInput& dao = c.instance.daos.front();
    for (std::size_t rank = 0; rank < dao.bids.size(); ++rank) {
        DeviationReport report = ic_deviation_scan(c.instance, 0, rank);
        if (report.profitable)
            return fail("profitable deviation for member rank " + std::to_string(rank) +
                        ": bid " + report.best_deviation_bid.to_string() + " raises utility " +
                        report.truthful_utility.to_string() + " -> " +
                        report.best_deviation_utility.to_string());
    }
    return ok;
}

// ----------------------------------------------------------------------------
// ic-grouped: the shipped underbidding witness is strictly profitable.

SuiteCase gen_ic_grouped(SuiteRng&, const SuiteConfig&) {
    SuiteCase c;
    c.instance = grouped_underbid_witness();
    c.has_instance = true;
    return c;
}

std::optional<std::string> check_ic_grouped(const SuiteCase& c) {
    DeviationReport report = ic_deviation_scan(c.instance, 0, 0);
    if (!report.profitable) return fail("witness member has no profitable deviation");
    const ExtendedValue truthful{Rational{BigInt{3}, BigInt{2}}};
    const ExtendedValue best{Rational{BigInt{7}, BigInt{3}}};
    if (report.truthful_utility != truthful)
        return fail("witness truthful utility drifted to " +
                    report.truthful_utility.to_string());
    if (report.best_deviation_utility != best)
        return fail("witness deviation utility drifted to " +
                    report.best_deviation_utility.to_string());
    return ok;
}

// ----------------------------------------------------------------------------
// figs: the worked examples, frozen as regression vectors.

std::vector<Rational> fig1_values() {
    std::vector<Rational> v;
    for (int b = 100; b >= 20; b -= 10) v.push_back(Rational{b});
    return v;
}

SuiteCase gen_figs(SuiteRng&, const SuiteConfig&, std::size_t id) {
    SuiteCase c;
    c.fig_case = id % 3;
    return c;
}

std::optional<std::string> check_figs(const SuiteCase& c) {
    switch (c.fig_case) {
    case 0: {
        BidProfile profile = make_profile(fig1_values());
        if (wtp_baseline(profile).value != Rational{300}) return fail("fig1 WTP != 300");
        MechanismOutcome out = allocate_baseline(profile, Rational{256});
        if (baseline_cutoff(profile, Rational{256}) != 7) return fail("fig1 i* != 7");
        Rational share{BigInt{256}, BigInt{7}};
        for (std::size_t i = 0; i < 7; ++i)
            if (out.p[i] != share || out.x[i] != Rational{1}) return fail("fig1 payments wrong");
        if (!out.p[7].is_zero() || !out.x[8].is_zero()) return fail("fig1 exclusions wrong");
        if (social_welfare(profile.bids(), out.x) != Rational{490}) return fail("fig1 SW != 490");

        Grouping grouped = Grouping::singletons(9);
        grouped.subgroups.resize(7);
        grouped.subgroups.push_back({7, 8});
        GroupingEvaluation eval = evaluate_grouping(profile, grouped);
        if (eval.wtp_total != Rational{320}) return fail("fig1 grouped WTP != 320");
        MechanismOutcome two = two_level_allocation(profile, grouped, Rational{256});
        if (two.p[6] != Rational{32}) return fail("fig1 grouped member 7 payment != 32");
        if (two.p[7] != Rational{16} || two.p[8] != Rational{16})
            return fail("fig1 subgroup member payments != 16");
        for (std::size_t i = 0; i < 9; ++i)
            if (two.x[i] != Rational{1}) return fail("fig1 grouped access incomplete");
        return ok;
    }
    case 1: {
        for (std::size_t a = 1; a <= 6; ++a) {
            std::size_t n = std::size_t{1} << a;
            std::vector<Rational> values;
            for (std::size_t i = 1; i <= n; ++i)
                values.push_back(Rational{BigInt{static_cast<long long>(n)},
                                          BigInt{static_cast<long long>(i)}});
            BidProfile profile = make_profile(values);
            if (wtp_baseline(profile).value != rat(n))
                return fail("fig2 ungrouped WTP != n at a=" + std::to_string(a));
            Rational expected = rat(n) * rat(a + 1) / Rational{2};
            Rational got = optimal_grouping(profile).opt_wtp;
            if (got != expected)
                return fail("fig2 opt_WTP " + got.to_string() + " != n(a+1)/2 at a=" +
                            std::to_string(a));
        }
        return ok;
    }
    default: {
        BidProfile profile = make_profile(fig1_values());
        const Rational alpha{1};
        if (wtp_collective(profile, alpha) != Rational{460}) return fail("fig3 WTP != 460");
        FeasibleParams params = optimal_parameters(profile, Rational{400}, alpha);
        if (params.p1 != Rational{56} || params.p2 != Rational{28} || params.k1 != 5 ||
            params.k2 != 8)
            return fail("fig3 parameters != (56, 28, 5, 8)");
        MechanismOutcome out = allocate_collective(profile, params);
        if (out.p_total != Rational{400}) return fail("fig3 budget != 400");
        std::vector<FeasibleParams> feasible =
            enumerate_feasible_params(profile, Rational{400}, alpha);
        if (feasible.empty() || !(feasible.front() == params))
            return fail("fig3 oracle disagrees with the algorithm");
        return ok;
    }
    }
}

// ----------------------------------------------------------------------------
// Dispatch.

struct SuiteDef {
    const char* name;
    bool expects_witness;
};

constexpr SuiteDef kSuites[] = {
    {"thm2", false},   {"thm3", false},    {"lemma1", false}, {"lemma2", false},
    {"thm4", false},   {"hl", false},      {"alpha0", false}, {"bb", false},
    {"ic-m1", false},  {"ic-grouped", true}, {"figs", false},
};

SuiteCase generate_case(const std::string& suite, SuiteRng& rng, const SuiteConfig& config,
                        std::size_t id) {
    if (suite == "thm2") return gen_thm2(rng, config);
    if (suite == "thm3") return gen_thm3(rng, config);
    if (suite == "lemma1") return gen_lemma1(rng, config);
    if (suite == "lemma2") return gen_lemma2(rng, config);
    if (suite == "thm4") return gen_thm4(rng, config);
    if (suite == "hl") return gen_hl(rng, config);
    if (suite == "alpha0") return gen_alpha0(rng, config);
    if (suite == "bb") return gen_bb(rng, config);
    if (suite == "ic-m1") return gen_ic_m1(rng, config);
    if (suite == "ic-grouped") return gen_ic_grouped(rng, config);
    if (suite == "figs") return gen_figs(rng, config, id);
    throw invariant_error("unknown suite: \"" + suite + "\"");
}

std::optional<std::string> run_check(const std::string& suite, const SuiteCase& c) {
    if (suite == "thm2") return check_thm2(c);
    if (suite == "thm3") return check_thm3(c);
    if (suite == "lemma1") return check_lemma1(c);
    if (suite == "lemma2") return check_lemma2(c);
    if (suite == "thm4") return check_thm4(c);
    if (suite == "hl") return check_hl(c);
    if (suite == "alpha0") return check_alpha0(c);
    if (suite == "bb") return check_bb(c);
    if (suite == "ic-m1") return check_ic_m1(c);
    if (suite == "ic-grouped") return check_ic_grouped(c);
    if (suite == "figs") return check_figs(c);
    throw invariant_error("unknown suite: \"" + suite + "\"");
}

std::uint64_t mix_seed(std::uint64_t seed, std::size_t index) {
    SuiteRng mixer(seed ^ (0x632be59bd9b4e019ull * (index + 1)));
    return mixer.next();
}

} // namespace

std::vector<Rational> random_values(SuiteRng& rng, std::size_t n, bool perturb) {
    std::vector<Rational> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational v = rat(rng.in(1, 100));
        if (perturb)
            v += Rational{BigInt{static_cast<long long>(rng.in(1, 999999))}, BigInt{1000000}};
        values.push_back(v);
    }
    return values;
}

Rational random_winning_price(SuiteRng& rng, const Rational& wtp) {
    return wtp * rat(rng.in(1, 64)) / rat(64);
}

Rational random_alpha(SuiteRng& rng) {
    return Rational{BigInt{static_cast<long long>(rng.in(1, 6))},
                    BigInt{static_cast<long long>(rng.in(1, 4))}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const SuiteDef& def : kSuites) v.emplace_back(def.name);
        return v;
    }();
    return names;
}

SuiteReport theorem_suite(const SuiteConfig& config) {
    const SuiteDef* def = nullptr;
    for (const SuiteDef& d : kSuites) {
        if (config.suite == d.name) {
            def = &d;
            break;
        }
    }
    if (!def) throw invariant_error("unknown suite: \"" + config.suite + "\"");

    SuiteReport report;
    report.suite = config.suite;
    report.seed = config.seed;
    report.expects_witness = def->expects_witness;

    std::size_t count = config.instances;
    if (config.suite == "figs") count = 3;
    if (config.suite == "ic-grouped") count = 1;
    report.instances_run = count;

    struct Slot {
        std::optional<std::string> violation;
        json data;
    };
    std::vector<Slot> slots(count);

    auto worker_body = [&](std::size_t i) {
        SuiteRng rng(mix_seed(config.seed, i));
        try {
            SuiteCase c = generate_case(config.suite, rng, config, i);
            if (auto violation = run_check(config.suite, c)) {
                slots[i].violation = violation;
                slots[i].data = case_to_json(c);
            }
        } catch (const std::exception& e) {
            slots[i].violation = std::string("unexpected exception: ") + e.what();
        }
    };

    if (config.threads > 1 && count > 1) {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        unsigned workers = std::min<unsigned>(config.threads, static_cast<unsigned>(count));
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                    worker_body(i);
            });
        }
        for (auto& t : pool) t.join();
    } else {
        for (std::size_t i = 0; i < count; ++i) worker_body(i);
    }

    constexpr std::size_t kMaxCounterexamples = 5;
    for (std::size_t i = 0; i < count; ++i) {
        if (!slots[i].violation) continue;
        ++report.violations;
        if (report.counterexamples.size() < kMaxCounterexamples) {
            report.counterexamples.push_back(
                Counterexample{i, *slots[i].violation, slots[i].data});
        }
    }
    report.pass = report.violations == 0;
    return report;
}

std::optional<std::string> replay_counterexample(const std::string& suite,
                                                 const nlohmann::json& data) {
    return run_check(suite, case_from_json(data));
}

} // namespace dao
