#pragma once

#include "dao/auction.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dao {

// Deterministic seeded generator (splitmix64). Self-contained so that suite
// streams are reproducible across standard libraries.
class SuiteRng {
public:
    explicit SuiteRng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    std::uint64_t in(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

private:
    std::uint64_t state_;
};

// Integer values uniform in [1, 100]; optionally perturbed by +r/10^6 with
// seeded r, which breaks critical ties when genericity is required.
std::vector<Rational> random_values(SuiteRng& rng, std::size_t n, bool perturb);

// A winning price on the u/64 grid of the given WTP, u in [1, 64].
Rational random_winning_price(SuiteRng& rng, const Rational& wtp);

// A strictly positive random collective factor.
Rational random_alpha(SuiteRng& rng);

struct SuiteConfig {
    std::string suite;
    std::uint64_t seed = 1;
    std::size_t instances = 200;
    std::size_t max_size = 8;
    unsigned threads = 0; // 0 or 1 = sequential
};

struct Counterexample {
    std::size_t instance_id = 0;
    std::string message;
    nlohmann::json data; // replayable via replay_counterexample
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t instances_run = 0;
    std::size_t violations = 0;
    bool pass = false;
    bool expects_witness = false; // ic-grouped documents a known non-IC witness
    std::vector<Counterexample> counterexamples; // first few, by instance id
};

// Runs the selected property suite over seeded instances. Failures are data,
// never exceptions. Suites: thm2, thm3, lemma1, lemma2, thm4, hl, alpha0,
// ic-m1, ic-grouped, figs. Throws invariant_error on an unknown suite name.
SuiteReport theorem_suite(const SuiteConfig& config);

const std::vector<std::string>& suite_names();

// Re-runs the suite's checker on a serialized counterexample. Returns the
// violation message if the failure reproduces.
std::optional<std::string> replay_counterexample(const std::string& suite,
                                                 const nlohmann::json& data);

} // namespace dao
