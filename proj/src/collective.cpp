#include "dao/collective.hpp"

#include "dao/errors.hpp"

#include <algorithm>

namespace dao {

namespace {

Rational rat(std::size_t v) { return Rational{static_cast<long long>(v)}; }

// b_{i} with the b_{n+1} = 0 sentinel, 1-based.
Rational bid_at(const BidProfile& profile, std::size_t i) {
    return i >= 1 && i <= profile.size() ? profile.bid(i - 1) : Rational{0};
}

// Pool capacity for width k2: sum_{j<=k2} min(b_j, (1+alpha) b_{k2}).
Rational pool_capacity(const BidProfile& profile, std::size_t k2, const Rational& one_plus_alpha) {
    Rational cap = one_plus_alpha * profile.bid(k2 - 1);
    Rational size;
    for (std::size_t j = 1; j <= k2; ++j) size += std::min(profile.bid(j - 1), cap);
    return size;
}

void check_alpha(const Rational& alpha) {
    if (alpha.is_negative()) throw invariant_error("collective factor alpha must be >= 0");
}

} // namespace

Rational wtp_collective(const BidProfile& profile, const Rational& alpha) {
    check_alpha(alpha);
    const Rational one_plus_alpha = Rational{1} + alpha;
    Rational best;
    for (std::size_t i = 1; i <= profile.size(); ++i) {
        Rational total = pool_capacity(profile, i, one_plus_alpha);
        if (i == 1 || total > best) best = total;
    }
    return best;
}

FeasibleParams optimal_parameters(const BidProfile& profile, const Rational& p_total,
                                  const Rational& alpha) {
    check_alpha(alpha);
    if (p_total.is_negative()) throw invariant_error("optimal_parameters: negative price");
    const std::size_t n = profile.size();
    FeasibleParams params;
    params.alpha = alpha;
    const Rational one_plus_alpha = Rational{1} + alpha;

    if (p_total.is_zero()) {
        params.p1 = Rational{0};
        params.p2 = Rational{0};
        params.k1 = n;
        params.k2 = n;
        return params;
    }

    // Widest pool whose capacity reaches the price.
    std::size_t k2 = n + 1;
    Rational size;
    while (p_total > size) {
        if (k2 == 1)
            throw losing_price_error("not a winning price: P_total " + p_total.to_string() +
                                     " exceeds WTP " +
                                     wtp_collective(profile, alpha).to_string());
        --k2;
        size = pool_capacity(profile, k2, one_plus_alpha);
    }

    // Water line.
    std::size_t k1;
    Rational p1;
    Rational p_remain = p_total - rat(k2) * profile.bid(k2 - 1);
    if (!(p_remain > Rational{0})) {
        k1 = k2;
        p1 = p_total / rat(k2);
    } else {
        k1 = k2 - 1;
        bool settled = false;
        while (k1 >= 1) {
            Rational layer = rat(k1) * (bid_at(profile, k1) - bid_at(profile, k1 + 1));
            if (p_remain <= layer) {
                p1 = bid_at(profile, k1 + 1) + p_remain / rat(k1);
                settled = true;
                break;
            }
            p_remain -= layer;
            --k1;
        }
        if (!settled)
            throw invariant_error("optimal_parameters: water line left the pool; "
                                  "capacity precondition violated");
    }

    params.p1 = p1;
    params.p2 = p1 / one_plus_alpha;
    params.k1 = k1;
    params.k2 = k2;
    validate_feasible(profile, params);
    return params;
}

void validate_feasible(const BidProfile& profile, const FeasibleParams& params) {
    check_alpha(params.alpha);
    const std::size_t n = profile.size();
    if (params.k1 > params.k2 || params.k2 > n)
        throw invariant_error("feasible params: k1 <= k2 <= n violated");
    const Rational one_plus_alpha = Rational{1} + params.alpha;
    if (params.p2 * one_plus_alpha != params.p1)
        throw invariant_error("feasible params: P2 != P1 / (1 + alpha)");
    if (params.p1.is_zero()) {
        if (params.k1 != n || params.k2 != n)
            throw invariant_error("feasible params: zero price requires full access");
        return;
    }
    // k1 = max{i | b_i >= P1}; k2 = max{i | b_i >= P2} (sentinel b_{n+1} = 0).
    if (params.k1 == 0 || bid_at(profile, params.k1) < params.p1)
        throw invariant_error("feasible params: b_{k1} < P1");
    if (bid_at(profile, params.k1 + 1) >= params.p1)
        throw invariant_error("feasible params: k1 is not maximal");
    if (bid_at(profile, params.k2) < params.p2)
        throw invariant_error("feasible params: b_{k2} < P2");
    if (bid_at(profile, params.k2 + 1) >= params.p2)
        throw invariant_error("feasible params: k2 is not maximal");
}

MechanismOutcome allocate_collective(const BidProfile& profile, const FeasibleParams& params) {
    validate_feasible(profile, params);
    MechanismOutcome out;
    out.won = true;
    out.x.assign(profile.size(), Rational{0});
    out.p.assign(profile.size(), Rational{0});
    for (std::size_t i = 1; i <= params.k1; ++i) {
        out.x[i - 1] = Rational{1};
        out.p[i - 1] = params.p1;
    }
    for (std::size_t i = params.k1 + 1; i <= params.k2; ++i) {
        out.x[i - 1] = profile.bid(i - 1) / params.p1;
        out.p[i - 1] = profile.bid(i - 1);
    }
    Rational total;
    for (const Rational& pi : out.p) total += pi;
    out.p_total = total;
    return out;
}

ExtendedValue member_utility(std::size_t i, const std::vector<Rational>& values,
                             const MechanismOutcome& outcome, const Rational& alpha) {
    check_alpha(alpha);
    if (values.size() != outcome.x.size() || values.size() != outcome.p.size())
        throw invariant_error("member_utility: length mismatch");
    if (i >= values.size()) throw invariant_error("member_utility: index out of range");
    if (outcome.p[i] > values[i]) return ExtendedValue::neg_infinity();
    if (outcome.x[i].is_zero()) return ExtendedValue{-outcome.p[i]};
    Rational sw;
    for (std::size_t j = 0; j < values.size(); ++j) sw += values[j] * outcome.x[j];
    return ExtendedValue{values[i] * outcome.x[i] - outcome.p[i] + alpha * sw};
}

std::vector<FeasibleParams> enumerate_feasible_params(const BidProfile& profile,
                                                      const Rational& p_total,
                                                      const Rational& alpha) {
    check_alpha(alpha);
    if (p_total.is_negative()) throw invariant_error("enumerate_feasible_params: negative price");
    const std::size_t n = profile.size();
    std::vector<FeasibleParams> out;
    if (p_total.is_zero()) {
        FeasibleParams trivial;
        trivial.alpha = alpha;
        trivial.k1 = n;
        trivial.k2 = n;
        out.push_back(trivial);
        return out;
    }
    const Rational one_plus_alpha = Rational{1} + alpha;
    for (std::size_t k2 = n; k2 >= 1; --k2) {
        // Budget balance pins P1 for each k1: k1 * P1 + sum_{k1 < i <= k2} b_i = P_total.
        Rational suffix; // sum of bids in (k1, k2]
        bool found = false;
        FeasibleParams candidate;
        for (std::size_t k1 = k2; k1 >= 1; --k1) {
            Rational p1 = (p_total - suffix) / rat(k1);
            suffix += profile.bid(k1 - 1);
            if (!(p1 > Rational{0})) continue;
            if (bid_at(profile, k1) < p1 || bid_at(profile, k1 + 1) >= p1) continue;
            if (one_plus_alpha * bid_at(profile, k2) < p1) continue;
            if (one_plus_alpha * bid_at(profile, k2 + 1) >= p1) continue;
            candidate.p1 = p1;
            candidate.p2 = p1 / one_plus_alpha;
            candidate.k1 = k1;
            candidate.k2 = k2;
            candidate.alpha = alpha;
            found = true;
            break;
        }
        if (found) {
            validate_feasible(profile, candidate);
            out.push_back(candidate);
        }
    }
    return out;
}

} // namespace dao
