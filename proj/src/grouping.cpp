#include "dao/grouping.hpp"

#include "dao/baseline.hpp"
#include "dao/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dao {

Grouping Grouping::degenerate(std::size_t n) {
    Grouping g;
    g.subgroups.emplace_back(n);
    std::iota(g.subgroups[0].begin(), g.subgroups[0].end(), std::size_t{0});
    return g;
}

Grouping Grouping::singletons(std::size_t n) {
    Grouping g;
    for (std::size_t i = 0; i < n; ++i) g.subgroups.push_back({i});
    return g;
}

bool Grouping::is_partition_of(std::size_t n) const {
    std::vector<bool> seen(n, false);
    for (const auto& sub : subgroups) {
        if (sub.empty()) return false;
        for (std::size_t prev = n, idx = 0; idx < sub.size(); ++idx) {
            std::size_t m = sub[idx];
            if (m >= n || seen[m]) return false;
            if (idx > 0 && m <= prev) return false;
            seen[m] = true;
            prev = m;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool Grouping::is_continuous() const {
    for (const auto& sub : subgroups) {
        if (sub.empty()) return false;
        if (sub.back() - sub.front() + 1 != sub.size()) return false;
    }
    return true;
}

Rational subgroup_wtp(std::span<const Rational> values_desc) {
    if (values_desc.empty()) throw invariant_error("subgroup_wtp: empty subgroup");
    Rational best;
    for (std::size_t i = 0; i < values_desc.size(); ++i) {
        Rational candidate = Rational{static_cast<long long>(i + 1)} * values_desc[i];
        if (i == 0 || candidate > best) best = candidate;
    }
    return best;
}

GroupingEvaluation evaluate_grouping(const BidProfile& values, const Grouping& grouping) {
    if (!grouping.is_partition_of(values.size()))
        throw invariant_error("evaluate_grouping: not a partition of the member set");
    GroupingEvaluation eval;
    eval.subgroup_wtps.reserve(grouping.subgroups.size());
    for (const auto& sub : grouping.subgroups) {
        std::vector<Rational> vals;
        vals.reserve(sub.size());
        for (std::size_t rank : sub) vals.push_back(values.bid(rank));
        eval.subgroup_wtps.push_back(subgroup_wtp(vals));
    }
    std::vector<Rational> sorted = eval.subgroup_wtps;
    std::sort(sorted.begin(), sorted.end(), std::greater<>{});
    for (std::size_t j = 1; j <= sorted.size(); ++j) {
        Rational candidate = Rational{static_cast<long long>(j)} * sorted[j - 1];
        if (j == 1 || candidate >= eval.wtp_total) { // ties favor the largest j
            eval.wtp_total = candidate;
            eval.critical_index = j;
            eval.critical_value = sorted[j - 1];
        }
    }
    return eval;
}

OptimalGroupingResult optimal_grouping(const BidProfile& values) {
    const std::size_t n = values.size();
    const auto& v = values.bids();

    // Candidate critical values: the valuations of all O(n^2) continuous
    // intervals, deduplicated keeping first-encountered order.
    std::vector<Rational> candidates;
    std::set<Rational> seen;
    for (std::size_t i = 0; i < n; ++i) {
        Rational wtp;
        for (std::size_t j = i; j < n; ++j) {
            Rational len_val = Rational{static_cast<long long>(j - i + 1)} * v[j];
            if (j == i || len_val > wtp) wtp = len_val;
            if (seen.insert(wtp).second) candidates.push_back(wtp);
        }
    }

    Rational opt_wtp{0};
    Rational opt_cv{0};
    std::size_t k = 0;
    for (const Rational& cv : candidates) {
        std::size_t ci = 0;
        std::size_t subgroup_size = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (Rational{static_cast<long long>(subgroup_size)} * v[i] >= cv) {
                ++ci;
                subgroup_size = 1;
            } else {
                ++subgroup_size;
            }
        }
        Rational total = Rational{static_cast<long long>(ci)} * cv;
        if (total > opt_wtp) {
            opt_wtp = total;
            opt_cv = cv;
            k = ci;
        }
    }

    OptimalGroupingResult result;
    if (k == 0) {
        // All-zero values: no candidate strictly improves on 0.
        result.grouping = Grouping::degenerate(n);
        result.opt_wtp = Rational{0};
        result.opt_cv = Rational{0};
        result.k = 1;
        result.premerge_sizes = {n};
        result.eval = evaluate_grouping(values, result.grouping);
        return result;
    }

    // Rebuild the greedy intervals for opt_cv, then merge the leftover tail
    // into the k-th subgroup.
    std::vector<std::size_t> boundaries{0}; // list N, 1-based end positions
    std::size_t subgroup_size = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (Rational{static_cast<long long>(subgroup_size)} * v[i] >= opt_cv) {
            boundaries.push_back(i + 1);
            subgroup_size = 1;
        } else {
            ++subgroup_size;
        }
    }
    if (boundaries.size() != k + 1)
        throw invariant_error("optimal_grouping: rebuild produced a different subgroup count");

    result.premerge_sizes.reserve(k);
    for (std::size_t j = 1; j <= k; ++j)
        result.premerge_sizes.push_back(boundaries[j] - boundaries[j - 1]);

    result.grouping.subgroups.reserve(k);
    for (std::size_t j = 1; j <= k; ++j) {
        std::vector<std::size_t> sub;
        std::size_t end = (j == k) ? n : boundaries[j]; // tail merge
        for (std::size_t m = boundaries[j - 1]; m < end; ++m) sub.push_back(m);
        result.grouping.subgroups.push_back(std::move(sub));
    }

    result.opt_wtp = opt_wtp;
    result.opt_cv = opt_cv;
    result.k = k;
    result.eval = evaluate_grouping(values, result.grouping);
    return result;
}

namespace {

void check_enum_range(std::size_t n, std::size_t max_n, const char* what) {
    if (n < 1 || n > max_n)
        throw invariant_error(std::string(what) + ": n out of range [1, " +
                              std::to_string(max_n) + "]");
}

} // namespace

void for_each_continuous_grouping(std::size_t n,
                                  const std::function<bool(const Grouping&)>& visit) {
    check_enum_range(n, 20, "for_each_continuous_grouping");
    // Each of the n-1 gaps is either a cut or not.
    const std::size_t masks = std::size_t{1} << (n - 1);
    for (std::size_t mask = 0; mask < masks; ++mask) {
        Grouping g;
        std::vector<std::size_t> current{0};
        for (std::size_t i = 1; i < n; ++i) {
            if (mask & (std::size_t{1} << (i - 1))) {
                g.subgroups.push_back(std::move(current));
                current = {i};
            } else {
                current.push_back(i);
            }
        }
        g.subgroups.push_back(std::move(current));
        if (!visit(g)) return;
    }
}

std::vector<Grouping> enumerate_continuous_groupings(std::size_t n) {
    std::vector<Grouping> out;
    for_each_continuous_grouping(n, [&](const Grouping& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

void for_each_grouping(std::size_t n, const std::function<bool(const Grouping&)>& visit) {
    check_enum_range(n, 10, "for_each_grouping");
    // Restricted growth strings: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
    std::vector<std::size_t> a(n, 0);
    auto emit = [&]() {
        std::size_t blocks = *std::max_element(a.begin(), a.end()) + 1;
        Grouping g;
        g.subgroups.assign(blocks, {});
        for (std::size_t i = 0; i < n; ++i) g.subgroups[a[i]].push_back(i);
        return visit(g);
    };
    while (true) {
        if (!emit()) return;
        bool advanced = false;
        for (std::size_t i = n; i-- > 1;) {
            std::size_t prefix_max = 0;
            for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, a[j]);
            if (a[i] <= prefix_max) {
                ++a[i];
                std::fill(a.begin() + i + 1, a.end(), std::size_t{0});
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

std::vector<Grouping> enumerate_all_groupings(std::size_t n) {
    std::vector<Grouping> out;
    for_each_grouping(n, [&](const Grouping& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

MechanismOutcome two_level_allocation(const BidProfile& values, const Grouping& grouping,
                                      const Rational& p_total) {
    GroupingEvaluation eval = evaluate_grouping(values, grouping);
    if (p_total > eval.wtp_total)
        throw losing_price_error("not a winning price: P_total " + p_total.to_string() +
                                 " exceeds grouping WTP " + eval.wtp_total.to_string());

    // Order subgroups by WTP non-increasingly, ties by lowest member rank.
    std::vector<std::size_t> order(grouping.subgroups.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (eval.subgroup_wtps[a] != eval.subgroup_wtps[b])
            return eval.subgroup_wtps[a] > eval.subgroup_wtps[b];
        return grouping.subgroups[a].front() < grouping.subgroups[b].front();
    });

    // Upper pass: treat subgroups as members of a DAO.
    std::size_t sub_star = 0;
    for (std::size_t j = order.size(); j >= 1; --j) {
        if (Rational{static_cast<long long>(j)} * eval.subgroup_wtps[order[j - 1]] >= p_total) {
            sub_star = j;
            break;
        }
    }
    if (sub_star == 0)
        throw invariant_error("two_level_allocation: no subgroup cutoff despite winning price");

    MechanismOutcome out;
    out.won = true;
    out.p_total = p_total;
    out.x.assign(values.size(), Rational{0});
    out.p.assign(values.size(), Rational{0});

    Rational sub_price = p_total / Rational{static_cast<long long>(sub_star)};
    for (std::size_t j = 0; j < sub_star; ++j) {
        const auto& sub = grouping.subgroups[order[j]];
        std::vector<Rational> vals;
        vals.reserve(sub.size());
        for (std::size_t rank : sub) vals.push_back(values.bid(rank));
        MechanismOutcome inner = allocate_baseline(make_profile(vals), sub_price);
        // Subgroup members are already in non-increasing value order, and
        // make_profile is stable, so inner rank i maps to sub[i].
        for (std::size_t i = 0; i < sub.size(); ++i) {
            out.x[sub[i]] = inner.x[i];
            out.p[sub[i]] = inner.p[i];
        }
    }
    return out;
}

Excludability compare_excludability(const std::vector<Rational>& x1,
                                    const std::vector<Rational>& x2) {
    if (x1.size() != x2.size())
        throw invariant_error("compare_excludability: length mismatch");
    bool ge = true, le = true;
    for (std::size_t i = 0; i < x1.size(); ++i) {
        if (x1[i] < x2[i]) ge = false;
        if (x1[i] > x2[i]) le = false;
    }
    if (ge && le) return Excludability::equal;
    if (ge) return Excludability::less_excludable;
    if (le) return Excludability::more_excludable;
    return Excludability::incomparable;
}

} // namespace dao
