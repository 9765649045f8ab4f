#ifndef NUMAP_SAMPLING_HPP
#define NUMAP_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "numap/tables.hpp"

namespace numap {

/// Deterministic random source. mt19937_64 is fully specified by the
/// standard and the mapping below avoids std::uniform_int_distribution,
/// whose output is implementation-defined; identical seeds therefore give
/// identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform-ish integer in [lo, hi], inclusive. The modulo bias is
    /// negligible for the tiny ranges used here and irrelevant for testing.
    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(
                        next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 gen_;
};

Vec random_vec(Rng& rng, std::size_t k, long long lo, long long hi);

/// Table with every coefficient drawn uniformly from [lo, hi]^m; zero
/// vectors drop out, so the result is sparse-canonical by construction.
NumTable random_table(Rng& rng, std::size_t k, std::size_t m, unsigned n,
                      long long lo, long long hi);
StrictTable random_strict_table(Rng& rng, std::size_t k, std::size_t m,
                                unsigned n, long long lo, long long hi);

}  // namespace numap

#endif
