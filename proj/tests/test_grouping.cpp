#include "dao/baseline.hpp"
#include "dao/errors.hpp"
#include "dao/grouping.hpp"
#include "dao/suites.hpp"

#include <doctest.h>

#include <algorithm>

using dao::BidProfile;
using dao::BigInt;
using dao::Excludability;
using dao::Grouping;
using dao::make_profile;
using dao::MechanismOutcome;
using dao::Rational;
using dao::SuiteRng;

namespace {

std::vector<Rational> fig1() {
    std::vector<Rational> v;
    for (int b = 100; b >= 20; b -= 10) v.emplace_back(b);
    return v;
}

std::vector<Rational> fig2_values(std::size_t a) {
    std::size_t n = std::size_t{1} << a;
    std::vector<Rational> v;
    for (std::size_t i = 1; i <= n; ++i)
        v.emplace_back(BigInt{static_cast<long long>(n)}, BigInt{static_cast<long long>(i)});
    return v;
}

Grouping fig1_grouped() {
    Grouping g = Grouping::singletons(9);
    g.subgroups.resize(7);
    g.subgroups.push_back({7, 8});
    return g;
}

Rational brute_force_opt(const BidProfile& profile) {
    Rational best;
    dao::for_each_grouping(profile.size(), [&](const Grouping& g) {
        Rational w = dao::evaluate_grouping(profile, g).wtp_total;
        if (w > best) best = w;
        return true;
    });
    return best;
}

} // namespace

TEST_CASE("subgroup_wtp worked examples") {
    std::vector<Rational> pair{Rational{30}, Rational{20}};
    CHECK(dao::subgroup_wtp(pair) == Rational{40});

    // Tail subgroup of the geometric family at a=3, n=8: (8/5, 4/3, 8/7, 1).
    std::vector<Rational> tail{Rational(BigInt{8}, BigInt{5}), Rational(BigInt{4}, BigInt{3}),
                               Rational(BigInt{8}, BigInt{7}), Rational{1}};
    CHECK(dao::subgroup_wtp(tail) == Rational{4});

    std::vector<Rational> single{Rational{7}};
    CHECK(dao::subgroup_wtp(single) == Rational{7});
    CHECK_THROWS_AS(dao::subgroup_wtp(std::span<const Rational>{}), dao::invariant_error);
}

TEST_CASE("evaluate_grouping worked examples") {
    // Geometric family, a = 3: grouping {1},{2},{3,4},{5..8} reaches n(a+1)/2 = 16.
    BidProfile geo = make_profile(fig2_values(3));
    Grouping g;
    g.subgroups = {{0}, {1}, {2, 3}, {4, 5, 6, 7}};
    auto eval = dao::evaluate_grouping(geo, g);
    CHECK(eval.wtp_total == Rational{16});
    CHECK(eval.wtp_total == Rational{static_cast<long long>(eval.critical_index)} *
                                eval.critical_value);

    BidProfile fig = make_profile(fig1());
    CHECK(dao::evaluate_grouping(fig, Grouping::degenerate(9)).wtp_total == Rational{300});
    CHECK(dao::evaluate_grouping(fig, Grouping::singletons(9)).wtp_total == Rational{300});

    CHECK(dao::evaluate_grouping(fig, fig1_grouped()).wtp_total == Rational{320});

    Grouping bad;
    bad.subgroups = {{0, 1}};
    CHECK_THROWS_AS(dao::evaluate_grouping(fig, bad), dao::invariant_error);
}

TEST_CASE("optimal grouping on the worked families") {
    // Fig. 1 values: the {8,9} grouping of the illustration reaches 320, but
    // the optimum is 400 via {1},{2},{3},{4,5},{6..9} (confirmed by the
    // all-partitions oracle below).
    auto og = dao::optimal_grouping(make_profile(fig1()));
    CHECK(og.opt_wtp == Rational{400});
    CHECK(og.opt_cv == Rational{80});
    CHECK(og.k == 5);
    CHECK(og.grouping.subgroups ==
          std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {3, 4}, {5, 6, 7, 8}});
    CHECK(og.opt_wtp == brute_force_opt(make_profile(fig1())));

    for (std::size_t a = 1; a <= 6; ++a) {
        std::size_t n = std::size_t{1} << a;
        auto result = dao::optimal_grouping(make_profile(fig2_values(a)));
        Rational expected = Rational{static_cast<long long>(n)} *
                            Rational{static_cast<long long>(a + 1)} / Rational{2};
        CHECK(result.opt_wtp == expected);
        CHECK(result.eval.wtp_total == result.opt_wtp);
        CHECK(result.grouping.is_continuous());
    }

    // Equal values: grouping cannot improve on n*b.
    for (std::size_t n = 1; n <= 8; ++n) {
        std::vector<Rational> flat(n, Rational{13});
        auto result = dao::optimal_grouping(make_profile(flat));
        CHECK(result.opt_wtp == Rational{static_cast<long long>(n)} * Rational{13});
        CHECK(result.opt_wtp == brute_force_opt(make_profile(flat)));
    }

    // All-zero values degenerate to one subgroup with WTP 0.
    std::vector<Rational> zeros(4, Rational{0});
    auto zero_result = dao::optimal_grouping(make_profile(zeros));
    CHECK(zero_result.opt_wtp.is_zero());
    CHECK(zero_result.grouping == Grouping::degenerate(4));
}

TEST_CASE("grouping enumerators") {
    auto continuous3 = dao::enumerate_continuous_groupings(3);
    REQUIRE(continuous3.size() == 4);
    for (const Grouping& g : continuous3) {
        CHECK(g.is_continuous());
        CHECK(g.is_partition_of(3));
    }
    CHECK(dao::enumerate_continuous_groupings(1).size() == 1);
    CHECK(dao::enumerate_continuous_groupings(10).size() == 512);

    CHECK(dao::enumerate_all_groupings(1).size() == 1);
    CHECK(dao::enumerate_all_groupings(3).size() == 5);
    CHECK(dao::enumerate_all_groupings(4).size() == 15);
    auto bell8 = dao::enumerate_all_groupings(8);
    CHECK(bell8.size() == 4140);
    for (const Grouping& g : dao::enumerate_all_groupings(5)) CHECK(g.is_partition_of(5));

    CHECK_THROWS_AS(dao::for_each_grouping(0, [](const Grouping&) { return true; }),
                    dao::invariant_error);
    CHECK_THROWS_AS(dao::for_each_grouping(11, [](const Grouping&) { return true; }),
                    dao::invariant_error);
    CHECK_THROWS_AS(dao::for_each_continuous_grouping(21, [](const Grouping&) { return true; }),
                    dao::invariant_error);
}

TEST_CASE("two-level allocation composes the baseline rule") {
    BidProfile fig = make_profile(fig1());
    MechanismOutcome out = dao::two_level_allocation(fig, fig1_grouped(), Rational{256});
    dao::validate_outcome(out);
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(out.x[i] == Rational{1});
        CHECK(out.p[i] == Rational{32});
    }
    CHECK(out.x[7] == Rational{1});
    CHECK(out.x[8] == Rational{1});
    CHECK(out.p[7] == Rational{16});
    CHECK(out.p[8] == Rational{16});

    // The degenerate grouping reproduces the baseline exactly.
    SuiteRng rng(37);
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t n = rng.in(1, 9);
        std::vector<Rational> values = dao::random_values(rng, n, rng.below(2) == 0);
        BidProfile profile = make_profile(values);
        Rational p = dao::random_winning_price(rng, wtp_baseline(profile).value);
        CHECK(dao::two_level_allocation(profile, Grouping::degenerate(n), p) ==
              dao::allocate_baseline(profile, p));
    }

    MechanismOutcome free = dao::two_level_allocation(fig, fig1_grouped(), Rational{0});
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(free.x[i] == Rational{1});
        CHECK(free.p[i].is_zero());
    }

    CHECK_THROWS_AS(dao::two_level_allocation(fig, fig1_grouped(), Rational{321}),
                    dao::losing_price_error);
}

TEST_CASE("excludability comparison") {
    auto vec = [](std::initializer_list<int> vs) {
        std::vector<Rational> out;
        for (int v : vs) out.emplace_back(v);
        return out;
    };
    CHECK(dao::compare_excludability(vec({1, 1, 1}), vec({1, 1, 0})) ==
          Excludability::less_excludable);
    CHECK(dao::compare_excludability(vec({1, 0}), vec({0, 1})) == Excludability::incomparable);
    CHECK(dao::compare_excludability(vec({1, 0}), vec({1, 0})) == Excludability::equal);
    CHECK(dao::compare_excludability(vec({0, 0}), vec({1, 0})) ==
          Excludability::more_excludable);
    CHECK_THROWS_AS(dao::compare_excludability(vec({1}), vec({1, 0})), dao::invariant_error);

    // Fig. 1 at 256: grouped allocation dominates the degenerate one.
    BidProfile fig = make_profile(fig1());
    MechanismOutcome grouped = dao::two_level_allocation(fig, fig1_grouped(), Rational{256});
    MechanismOutcome degenerate = dao::allocate_baseline(fig, Rational{256});
    CHECK(dao::compare_excludability(grouped.x, degenerate.x) ==
          Excludability::less_excludable);
}

TEST_CASE("oracle equivalence and the thm3/lemma1 properties on random profiles") {
    SuiteRng rng(41);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t n = rng.in(1, 7);
        std::vector<Rational> values =
            rng.below(3) == 0 ? dao::random_values(rng, n, false) : [&] {
                std::vector<Rational> v;
                for (std::size_t i = 0; i < n; ++i)
                    v.emplace_back(static_cast<long long>(rng.in(1, 6)));
                return v;
            }();
        BidProfile profile = make_profile(values);
        auto og = dao::optimal_grouping(profile);

        Rational best_all = brute_force_opt(profile);
        Rational best_cont;
        dao::for_each_continuous_grouping(n, [&](const Grouping& g) {
            Rational w = dao::evaluate_grouping(profile, g).wtp_total;
            if (w > best_cont) best_cont = w;
            return true;
        });
        CHECK(og.opt_wtp == best_all);
        CHECK(best_all == best_cont); // continuous groupings suffice
        CHECK(og.opt_wtp >= wtp_baseline(profile).value);
        CHECK(std::is_sorted(og.premerge_sizes.begin(), og.premerge_sizes.end()));

        Rational p = dao::random_winning_price(rng, wtp_baseline(profile).value);
        MechanismOutcome degenerate = dao::allocate_baseline(profile, p);
        MechanismOutcome grouped = dao::two_level_allocation(profile, og.grouping, p);
        auto cmp = dao::compare_excludability(grouped.x, degenerate.x);
        bool superset = cmp == Excludability::less_excludable || cmp == Excludability::equal;
        CHECK(superset); // grouped access contains degenerate access

        // Equal treatment across subgroups: ties in subgroup WTP get the same
        // subgroup-level access and total payment.
        auto eval = dao::evaluate_grouping(profile, og.grouping);
        for (std::size_t a = 0; a < og.grouping.subgroups.size(); ++a) {
            for (std::size_t b = a + 1; b < og.grouping.subgroups.size(); ++b) {
                if (eval.subgroup_wtps[a] != eval.subgroup_wtps[b]) continue;
                Rational paid_a, paid_b;
                bool access_a = false, access_b = false;
                for (std::size_t rank : og.grouping.subgroups[a]) {
                    paid_a += grouped.p[rank];
                    access_a = access_a || !grouped.x[rank].is_zero();
                }
                for (std::size_t rank : og.grouping.subgroups[b]) {
                    paid_b += grouped.p[rank];
                    access_b = access_b || !grouped.x[rank].is_zero();
                }
                CHECK(paid_a == paid_b);
                CHECK(access_a == access_b);
            }
        }
    }
}
