#pragma once

#include "dao/profile.hpp"

#include <cstddef>
#include <vector>

namespace dao {

// Aggregated willingness to pay max_i i*b_i together with the largest
// maximizing index (1-based count, reported for diagnostics).
struct WtpBaseline {
    Rational value;
    std::size_t arg_index = 0;
};

// WTP_total = max_{i in [n]} i * b_i over the sorted profile.
WtpBaseline wtp_baseline(const BidProfile& profile);

// i* = max{ i | i * b_i >= p_total }, as a member count. Throws
// losing_price_error when p_total exceeds the profile's WTP.
std::size_t baseline_cutoff(const BidProfile& profile, const Rational& p_total);

// Binary access with an equal cost share: members ranked <= i* get x = 1 and
// pay p_total / i*; everyone else gets nothing and pays nothing. Output is in
// rank order; budget balance is exact.
MechanismOutcome allocate_baseline(const BidProfile& profile, const Rational& p_total);

// The all-zero outcome of a DAO that did not win.
MechanismOutcome losing_outcome(std::size_t n);

// SW = sum_i values[i] * x[i], exact. Throws invariant_error on length mismatch.
Rational social_welfare(const std::vector<Rational>& values, const std::vector<Rational>& x);

// H_ell = sum_{i=1..ell} 1/i, exact.
Rational harmonic_number(std::size_t ell);

// Whether opt_sw <= H_ell * sw. A zero sw with positive opt_sw is a bound
// failure, not an error.
bool harmonic_bound_check(const Rational& opt_sw, const Rational& sw, std::size_t ell);

} // namespace dao
