#include "numap/maps.hpp"

#include <algorithm>
#include <bit>

#include "numap/errors.hpp"
#include "numap/ring.hpp"
#include "numap/sampling.hpp"

namespace numap {

Vec MapOracle::operator()(const Vec& x) const {
    if (x.size() != k) throw RankError("oracle: argument rank mismatch");
    Vec out = fn(x);
    if (out.size() != m) throw RankError("oracle: result rank mismatch");
    return out;
}

Vec deviate(const MapOracle& phi, std::span<const Vec> xs) {
    const std::size_t t = xs.size();
    if (t >= 63) throw RankError("deviate: argument list too long");
    for (const Vec& x : xs)
        if (x.size() != phi.k) throw RankError("deviate: argument rank mismatch");
    Vec out = zero_vec(phi.m);
    for (std::uint64_t mask = 0; mask < (1ull << t); ++mask) {
        Vec sum = zero_vec(phi.k);
        for (std::size_t i = 0; i < t; ++i)
            if (mask & (1ull << i)) sum = vec_add(sum, xs[i]);
        Vec value = phi(sum);
        bool negate = (t - std::popcount(mask)) % 2 != 0;
        out = negate ? vec_sub(out, value) : vec_add(out, value);
    }
    return out;
}

namespace {
std::vector<Vec> basis_vectors(std::size_t k) {
    std::vector<Vec> e;
    e.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        Vec v = zero_vec(k);
        v[i] = Int(1);
        e.push_back(std::move(v));
    }
    return e;
}
}  // namespace

NumTable extract(const MapOracle& phi, unsigned n) {
    NumTable out;
    out.k = phi.k;
    out.m = phi.m;
    out.n = n;
    const std::vector<Vec> e = basis_vectors(phi.k);
    for (const MultiSet& X : enumerate_multisets(phi.k, n))
        out.set(X, deviate(phi, repeat_args(X, e)));
    return out;
}

MapOracle table_as_oracle(NumTable T) {
    std::size_t k = T.k, m = T.m;
    return {k, m,
            [T = std::move(T)](const Vec& a) { return eval_table(T, a); }};
}

MapOracle strict_as_oracle(StrictTable S) {
    std::size_t k = S.k, m = S.m;
    return {k, m,
            [S = std::move(S)](const Vec& a) { return eval_strict(S, a); }};
}

std::pair<Vec, Vec> check_eq1(const MapOracle& phi, unsigned n, const Int& r,
                              const Vec& x) {
    Vec lhs = phi(vec_scale(r, x));
    Vec rhs = zero_vec(phi.m);
    for (unsigned m = 0; m <= n; ++m) {
        Int c = binom(r, m) * binom(r - Int(m) - Int(1), n - m);
        if ((n - m) % 2 != 0) c = -c;
        if (c.is_zero()) continue;
        rhs = vec_add(rhs, vec_scale(c, phi(vec_scale(Int(m), x))));
    }
    return {std::move(lhs), std::move(rhs)};
}

std::pair<Vec, Vec> check_eq2(const MapOracle& phi, unsigned n,
                              std::span<const Int> a, std::span<const Vec> xs) {
    if (a.size() != xs.size()) throw RankError("check_eq2: scalar/vector count mismatch");
    const std::size_t t = xs.size();
    std::vector<Vec> scaled;
    scaled.reserve(t);
    for (std::size_t i = 0; i < t; ++i) scaled.push_back(vec_scale(a[i], xs[i]));
    Vec lhs = deviate(phi, scaled);
    Vec rhs = zero_vec(phi.m);
    for (const MultiSet& X : enumerate_multisets(t, n)) {
        if (!X.full_support()) continue;
        Int c = multi_binom(a, X);
        if (c.is_zero()) continue;
        rhs = vec_add(rhs, vec_scale(c, deviate(phi, repeat_args(X, xs))));
    }
    return {std::move(lhs), std::move(rhs)};
}

bool DegreeReport::deviation_ok() const {
    for (const DegreeViolation& v : violations)
        if (v.kind == DegreeViolation::Kind::deviation) return false;
    return true;
}

bool DegreeReport::scalar_ok() const {
    for (const DegreeViolation& v : violations)
        if (v.kind == DegreeViolation::Kind::scalar) return false;
    return true;
}

namespace {

// Points of [lo,hi]^k in odometer order.
std::vector<Vec> box_points(std::size_t k, long long lo, long long hi) {
    std::vector<Vec> pts;
    Vec cur(k, Int(lo));
    std::vector<long long> raw(k, lo);
    while (true) {
        pts.push_back(cur);
        std::size_t pos = 0;
        while (pos < k && raw[pos] == hi) {
            raw[pos] = lo;
            cur[pos] = Int(lo);
            ++pos;
        }
        if (pos == k) break;
        ++raw[pos];
        cur[pos] = Int(raw[pos]);
    }
    return pts;
}

double pow_count(double base, unsigned e) {
    double out = 1;
    while (e--) out *= base;
    return out;
}

}  // namespace

DegreeSample default_degree_sample(std::size_t k, unsigned n,
                                   const SampleOptions& opts) {
    if (opts.lo > opts.hi || opts.rlo > opts.rhi)
        throw ParseError("sample range is empty");

    DegreeSample sample;
    const unsigned t = n + 1;
    Rng rng(opts.seed);

    // The box is materialized only when small enough to exhaust; sampled
    // paths draw directly from the range, so arbitrary ranges stay cheap.
    double box = pow_count(static_cast<double>(opts.hi - opts.lo + 1),
                           static_cast<unsigned>(k));
    double limit = static_cast<double>(std::max(opts.tuple_limit, opts.pair_limit));
    std::vector<Vec> pts;
    if (box <= limit) pts = box_points(k, opts.lo, opts.hi);

    double tuple_count = pow_count(box, t);
    if (!pts.empty() && tuple_count <= static_cast<double>(opts.tuple_limit)) {
        std::vector<std::size_t> idx(t, 0);
        while (true) {
            std::vector<Vec> tuple;
            tuple.reserve(t);
            for (std::size_t i : idx) tuple.push_back(pts[i]);
            sample.tuples.push_back(std::move(tuple));
            std::size_t pos = 0;
            while (pos < t && idx[pos] + 1 == pts.size()) idx[pos++] = 0;
            if (pos == t) break;
            ++idx[pos];
        }
    } else {
        for (std::size_t c = 0; c < opts.tuple_limit; ++c) {
            std::vector<Vec> tuple;
            tuple.reserve(t);
            for (unsigned i = 0; i < t; ++i)
                tuple.push_back(random_vec(rng, k, opts.lo, opts.hi));
            sample.tuples.push_back(std::move(tuple));
        }
    }

    double scalar_count =
        static_cast<double>(opts.rhi - opts.rlo + 1) * box;
    if (!pts.empty() && scalar_count <= static_cast<double>(opts.pair_limit)) {
        for (long long r = opts.rlo; r <= opts.rhi; ++r)
            for (const Vec& x : pts) sample.pairs.emplace_back(Int(r), x);
    } else {
        for (std::size_t c = 0; c < opts.pair_limit; ++c)
            sample.pairs.emplace_back(Int(rng.uniform(opts.rlo, opts.rhi)),
                                      random_vec(rng, k, opts.lo, opts.hi));
    }
    return sample;
}

DegreeReport verify_degree(const MapOracle& phi, unsigned n,
                           const DegreeSample& sample) {
    DegreeReport report;
    report.degree = n;
    for (const std::vector<Vec>& tuple : sample.tuples) {
        ++report.deviation_checks;
        Vec value = deviate(phi, tuple);
        if (!is_zero(value)) {
            DegreeViolation v;
            v.kind = DegreeViolation::Kind::deviation;
            v.tuple = tuple;
            v.lhs = std::move(value);
            v.rhs = zero_vec(phi.m);
            report.violations.push_back(std::move(v));
        }
    }
    for (const auto& [r, x] : sample.pairs) {
        ++report.scalar_checks;
        // phi(r x) = sum_k C(r,k) * (k-th repeated deviation at x)
        Vec rhs = zero_vec(phi.m);
        for (unsigned d = 0; d <= n; ++d) {
            Int c = binom(r, d);
            if (c.is_zero()) continue;
            std::vector<Vec> rep(d, x);
            rhs = vec_add(rhs, vec_scale(c, deviate(phi, rep)));
        }
        Vec lhs = phi(vec_scale(r, x));
        if (lhs != rhs) {
            DegreeViolation v;
            v.kind = DegreeViolation::Kind::scalar;
            v.r = r;
            v.x = x;
            v.lhs = std::move(lhs);
            v.rhs = std::move(rhs);
            report.violations.push_back(std::move(v));
        }
    }
    return report;
}

DegreeReport verify_degree(const MapOracle& phi, unsigned n,
                           const SampleOptions& opts) {
    return verify_degree(phi, n, default_degree_sample(phi.k, n, opts));
}

}  // namespace numap
