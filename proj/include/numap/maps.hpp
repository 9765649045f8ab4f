#ifndef NUMAP_MAPS_HPP
#define NUMAP_MAPS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "numap/tables.hpp"

namespace numap {

/// Black-box map Z^k -> Z^m. The function must be deterministic and pure;
/// it may be called concurrently from several threads.
struct MapOracle {
    std::size_t k = 0, m = 0;
    std::function<Vec(const Vec&)> fn;

    Vec operator()(const Vec& x) const;
};

/// sum_{I subset of [t]} (-1)^{t-|I|} phi(sum_{i in I} x_i).
/// The empty argument list yields phi(0).
Vec deviate(const MapOracle& phi, std::span<const Vec> xs);

/// Coefficient extraction v_X = deviation of phi at the basis vectors of X,
/// over all X with |X| <= n. When phi is numerical of degree <= n the result
/// evaluates back to phi everywhere.
NumTable extract(const MapOracle& phi, unsigned n);

MapOracle table_as_oracle(NumTable T);
MapOracle strict_as_oracle(StrictTable S);

/// Both sides of the scalar characterization for polynomial maps of degree n:
///   phi(r x)  vs  sum_{m=0}^{n} (-1)^{n-m} C(r,m) C(r-m-1, n-m) phi(m x).
std::pair<Vec, Vec> check_eq1(const MapOracle& phi, unsigned n, const Int& r,
                              const Vec& x);

/// Both sides of the deviation product expansion:
///   phi(a_1 x_1 <> ... <> a_t x_t)  vs
///   sum_{#X = [t], |X| <= n} C(a,X) phi(<>_{i in X} x_i).
/// Note the support constraint is equality, not inclusion.
std::pair<Vec, Vec> check_eq2(const MapOracle& phi, unsigned n,
                              std::span<const Int> a, std::span<const Vec> xs);

struct DegreeViolation {
    enum class Kind { deviation, scalar } kind;
    std::vector<Vec> tuple; // deviation arguments (deviation kind)
    Int r;                  // scalar kind
    Vec x;                  // scalar kind
    Vec lhs, rhs;
};

struct DegreeReport {
    unsigned degree = 0;
    std::size_t deviation_checks = 0, scalar_checks = 0;
    std::vector<DegreeViolation> violations;

    bool ok() const { return violations.empty(); }
    bool deviation_ok() const;
    bool scalar_ok() const;
};

/// Explicit test data for verify_degree: (n+1)-tuples for the vanishing
/// condition and (r, x) pairs for the scalar condition.
struct DegreeSample {
    std::vector<std::vector<Vec>> tuples;
    std::vector<std::pair<Int, Vec>> pairs;
};

struct SampleOptions {
    long long lo = -3, hi = 3;   // argument vector range
    long long rlo = -6, rhi = 6; // scalar range
    std::size_t tuple_limit = 2000;
    std::size_t pair_limit = 2000;
    std::uint64_t seed = 0;
};

/// Exhaustive over the configured box when it fits within the limits,
/// otherwise a seeded uniform sample of limit size.
DegreeSample default_degree_sample(std::size_t k, unsigned n,
                                   const SampleOptions& opts = {});

/// Sample-based consistency check with "numerical of degree <= n": an empty
/// report means no violated instance was found. Exact for oracles arising
/// from tables; necessarily incomplete for arbitrary black boxes.
DegreeReport verify_degree(const MapOracle& phi, unsigned n,
                           const DegreeSample& sample);
DegreeReport verify_degree(const MapOracle& phi, unsigned n,
                           const SampleOptions& opts = {});

}  // namespace numap

#endif
