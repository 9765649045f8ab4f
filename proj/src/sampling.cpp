#include "numap/sampling.hpp"

namespace numap {

Vec random_vec(Rng& rng, std::size_t k, long long lo, long long hi) {
    Vec out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.emplace_back(rng.uniform(lo, hi));
    return out;
}

namespace {
template <class Table>
Table random_basis_table(Rng& rng, std::size_t k, std::size_t m, unsigned n,
                         long long lo, long long hi) {
    Table out;
    out.k = k;
    out.m = m;
    out.n = n;
    for (const MultiSet& X : enumerate_multisets(k, n))
        out.set(X, random_vec(rng, m, lo, hi));
    return out;
}
}  // namespace

NumTable random_table(Rng& rng, std::size_t k, std::size_t m, unsigned n,
                      long long lo, long long hi) {
    return random_basis_table<NumTable>(rng, k, m, n, lo, hi);
}

StrictTable random_strict_table(Rng& rng, std::size_t k, std::size_t m,
                                unsigned n, long long lo, long long hi) {
    return random_basis_table<StrictTable>(rng, k, m, n, lo, hi);
}

}  // namespace numap
