#include "numap/identities.hpp"

#include "numap/maps.hpp"
#include "numap/ring.hpp"
#include "numap/sampling.hpp"

namespace numap {

IdentitiesReport run_identities(const IdentitiesOptions& opts) {
    IdentitiesReport report;

    long long lemma_lo = -10, lemma_hi = 10;
    long long eq_lo = -6, eq_hi = 6;
    if (opts.range) {
        lemma_lo = eq_lo = opts.range->first;
        lemma_hi = eq_hi = opts.range->second;
    }

    for (long long r = lemma_lo; r <= lemma_hi; ++r)
        for (unsigned n = 0; n <= 6; ++n)
            for (unsigned m = 0; m <= n; ++m) {
                ++report.lemma_cases;
                auto [lhs, rhs] = lemma_binomial(Int(r), m, n);
                if (lhs != rhs) {
                    ++report.lemma_failures;
                    report.details.push_back("lemma r=" + std::to_string(r) +
                                             " m=" + std::to_string(m) +
                                             " n=" + std::to_string(n));
                }
            }

    Rng rng(opts.seed);
    for (std::size_t c = 0; c < opts.eq_cases; ++c) {
        auto k = static_cast<std::size_t>(rng.uniform(1, 3));
        auto m = static_cast<std::size_t>(rng.uniform(1, 2));
        auto n = static_cast<unsigned>(rng.uniform(0, 4));
        MapOracle phi = table_as_oracle(random_table(rng, k, m, n, -9, 9));

        ++report.eq1_cases;
        Int r(rng.uniform(eq_lo, eq_hi));
        Vec x = random_vec(rng, k, -4, 4);
        auto [lhs1, rhs1] = check_eq1(phi, n, r, x);
        if (lhs1 != rhs1) {
            ++report.eq1_failures;
            report.details.push_back("eq1 case " + std::to_string(c));
        }

        ++report.eq2_cases;
        auto t = static_cast<std::size_t>(rng.uniform(1, 3));
        std::vector<Int> scalars;
        std::vector<Vec> xs;
        for (std::size_t i = 0; i < t; ++i) {
            scalars.emplace_back(rng.uniform(eq_lo, eq_hi));
            xs.push_back(random_vec(rng, k, -4, 4));
        }
        auto [lhs2, rhs2] = check_eq2(phi, n, scalars, xs);
        if (lhs2 != rhs2) {
            ++report.eq2_failures;
            report.details.push_back("eq2 case " + std::to_string(c));
        }
    }
    return report;
}

}  // namespace numap
