#ifndef NUMAP_IDENTITIES_HPP
#define NUMAP_IDENTITIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace numap {

struct IdentitiesOptions {
    std::uint64_t seed = 0;
    /// When set, overrides both the lemma r-range (default [-10,10]) and the
    /// random scalar range for eq1/eq2 (default [-6,6]).
    std::optional<std::pair<long long, long long>> range;
    std::size_t eq_cases = 500;
};

struct IdentitiesReport {
    std::size_t lemma_cases = 0, lemma_failures = 0;
    std::size_t eq1_cases = 0, eq1_failures = 0;
    std::size_t eq2_cases = 0, eq2_failures = 0;
    std::vector<std::string> details; // one line per failing instance

    bool ok() const {
        return lemma_failures == 0 && eq1_failures == 0 && eq2_failures == 0;
    }
};

/// Exhaustive binomial-lemma sweep (r in the lemma range, 0 <= m <= n <= 6)
/// plus seeded random eq1/eq2 instances over table-backed oracles.
IdentitiesReport run_identities(const IdentitiesOptions& opts = {});

}  // namespace numap

#endif
