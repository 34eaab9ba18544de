#include "dao/baseline.hpp"

#include "dao/errors.hpp"

namespace dao {

WtpBaseline wtp_baseline(const BidProfile& profile) {
    WtpBaseline best;
    best.value = Rational{0};
    for (std::size_t i = 1; i <= profile.size(); ++i) {
        Rational candidate = Rational{static_cast<long long>(i)} * profile.bid(i - 1);
        if (i == 1 || candidate >= best.value) { // >= keeps the largest maximizer
            best.value = candidate;
            best.arg_index = i;
        }
    }
    return best;
}

std::size_t baseline_cutoff(const BidProfile& profile, const Rational& p_total) {
    for (std::size_t i = profile.size(); i >= 1; --i) {
        if (Rational{static_cast<long long>(i)} * profile.bid(i - 1) >= p_total) return i;
    }
    throw losing_price_error("not a winning price: P_total " + p_total.to_string() +
                             " exceeds WTP " + wtp_baseline(profile).value.to_string());
}

MechanismOutcome allocate_baseline(const BidProfile& profile, const Rational& p_total) {
    if (p_total.is_negative()) throw invariant_error("allocate_baseline: negative price");
    std::size_t i_star = baseline_cutoff(profile, p_total);
    MechanismOutcome out;
    out.won = true;
    out.p_total = p_total;
    out.x.assign(profile.size(), Rational{0});
    out.p.assign(profile.size(), Rational{0});
    Rational share = p_total / Rational{static_cast<long long>(i_star)};
    for (std::size_t rank = 0; rank < i_star; ++rank) {
        out.x[rank] = Rational{1};
        out.p[rank] = share;
    }
    return out;
}

MechanismOutcome losing_outcome(std::size_t n) {
    if (n == 0) throw invariant_error("losing_outcome: empty DAO");
    MechanismOutcome out;
    out.won = false;
    out.x.assign(n, Rational{0});
    out.p.assign(n, Rational{0});
    return out;
}

Rational social_welfare(const std::vector<Rational>& values, const std::vector<Rational>& x) {
    if (values.size() != x.size())
        throw invariant_error("social_welfare: values/access length mismatch");
    Rational sw;
    for (std::size_t i = 0; i < values.size(); ++i) sw += values[i] * x[i];
    return sw;
}

Rational harmonic_number(std::size_t ell) {
    if (ell == 0) throw invariant_error("harmonic_number: ell must be >= 1");
    Rational h;
    for (std::size_t i = 1; i <= ell; ++i) {
        h += Rational{1} / Rational{static_cast<long long>(i)};
    }
    return h;
}

bool harmonic_bound_check(const Rational& opt_sw, const Rational& sw, std::size_t ell) {
    return opt_sw <= harmonic_number(ell) * sw;
}

} // namespace dao
