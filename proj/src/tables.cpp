#include "numap/tables.hpp"

#include <algorithm>

#include "numap/errors.hpp"
#include "numap/ring.hpp"

namespace numap {

namespace {

template <class Scalar>
bool all_zero(const std::vector<Scalar>& v) {
    for (const Scalar& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Int pow_int(const Int& a, unsigned e) {
    Int out(1);
    for (unsigned i = 0; i < e; ++i) out *= a;
    return out;
}

// Coefficients of C(x, j) in the monomial basis: the falling factorial
// x(x-1)...(x-j+1) expanded, divided by j!.
std::vector<Rat> binom_monomial_coeffs(unsigned j) {
    std::vector<Int> falling{Int(1)}; // product so far, lowest degree first
    for (unsigned i = 0; i < j; ++i) {
        std::vector<Int> next(falling.size() + 1, Int(0));
        for (std::size_t d = 0; d < falling.size(); ++d) {
            next[d + 1] += falling[d];
            next[d] += Int(-static_cast<long long>(i)) * falling[d];
        }
        falling = std::move(next);
    }
    Int jfact = factorial(j);
    std::vector<Rat> out;
    out.reserve(falling.size());
    for (Int& c : falling) out.emplace_back(std::move(c), jfact);
    return out;
}

}  // namespace

template <class Scalar>
void BasisTable<Scalar>::set(const MultiSet& X, std::vector<Scalar> v) {
    if (X.k() != k) throw RankError("table: multiset rank mismatch");
    if (X.cardinality() > n) throw RankError("table: |X| exceeds degree bound");
    if (v.size() != m) throw RankError("table: coefficient rank mismatch");
    if (all_zero(v))
        coeffs.erase(X);
    else
        coeffs[X] = std::move(v);
}

template <class Scalar>
const std::vector<Scalar>* BasisTable<Scalar>::find(const MultiSet& X) const {
    auto it = coeffs.find(X);
    return it == coeffs.end() ? nullptr : &it->second;
}

template <class Scalar>
unsigned BasisTable<Scalar>::degree() const {
    unsigned deg = 0;
    for (const auto& [X, v] : coeffs) deg = std::max(deg, X.cardinality());
    return deg;
}

template struct BasisTable<Int>;
template struct BasisTable<Rat>;

Vec eval_table(const NumTable& T, std::span<const Int> a) {
    if (a.size() != T.k) throw RankError("eval_table: point rank mismatch");
    Vec out = zero_vec(T.m);
    for (const auto& [X, v] : T.coeffs) {
        Int c = multi_binom(a, X);
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < T.m; ++i) out[i] += c * v[i];
    }
    return out;
}

Vec eval_strict(const StrictTable& S, std::span<const Int> a) {
    if (a.size() != S.k) throw RankError("eval_strict: point rank mismatch");
    Vec out = zero_vec(S.m);
    for (const auto& [X, v] : S.coeffs) {
        Int c(1);
        for (std::size_t i = 0; i < S.k; ++i) c *= pow_int(a[i], X[i]);
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < S.m; ++i) out[i] += c * v[i];
    }
    return out;
}

NumTable strict_to_numerical(const StrictTable& S) {
    NumTable out;
    out.k = S.k;
    out.m = S.m;
    out.n = S.n;
    std::map<MultiSet, Vec> acc;
    for (const auto& [X, v] : S.coeffs) {
        // Expand each variable's power independently, then take the
        // cartesian product of the (j_i, S(m_i,j_i) j_i!) terms.
        std::vector<std::vector<Int>> expansions(S.k);
        for (std::size_t i = 0; i < S.k; ++i) {
            expansions[i].reserve(X[i] + 1);
            for (unsigned j = 0; j <= X[i]; ++j)
                expansions[i].push_back(stirling2(X[i], j) * factorial(j));
        }
        std::vector<std::uint32_t> j(S.k, 0);
        while (true) {
            Int factor(1);
            for (std::size_t i = 0; i < S.k; ++i) factor *= expansions[i][j[i]];
            if (!factor.is_zero()) {
                auto [it, inserted] =
                    acc.try_emplace(MultiSet(j), zero_vec(S.m));
                for (std::size_t i = 0; i < S.m; ++i)
                    it->second[i] += factor * v[i];
                (void)inserted;
            }
            std::size_t pos = 0;
            while (pos < S.k && j[pos] == X[pos]) j[pos++] = 0;
            if (pos == S.k) break;
            ++j[pos];
        }
    }
    for (auto& [X, v] : acc) out.set(X, std::move(v));
    return out;
}

RationalStrictForm numerical_to_strict_rational(const NumTable& T) {
    RationalStrictForm out;
    out.table.k = T.k;
    out.table.m = T.m;
    out.table.n = T.n;
    std::map<MultiSet, std::vector<Rat>> acc;
    for (const auto& [Y, v] : T.coeffs) {
        std::vector<std::vector<Rat>> expansions(T.k);
        for (std::size_t i = 0; i < T.k; ++i)
            expansions[i] = binom_monomial_coeffs(Y[i]);
        std::vector<std::uint32_t> d(T.k, 0);
        while (true) {
            Rat factor{Int(1)};
            for (std::size_t i = 0; i < T.k; ++i)
                factor = factor * expansions[i][d[i]];
            if (!factor.is_zero()) {
                auto [it, inserted] = acc.try_emplace(
                    MultiSet(d), std::vector<Rat>(T.m, Rat{}));
                for (std::size_t i = 0; i < T.m; ++i)
                    it->second[i] = it->second[i] + factor * Rat{v[i]};
                (void)inserted;
            }
            std::size_t pos = 0;
            while (pos < T.k && d[pos] + 1 == expansions[pos].size())
                d[pos++] = 0;
            if (pos == T.k) break;
            ++d[pos];
        }
    }
    for (auto& [X, v] : acc) {
        out.table.set(X, std::move(v));
        if (const auto* stored = out.table.find(X))
            for (const Rat& c : *stored)
                if (!c.is_integral()) out.integral = false;
    }
    return out;
}

StrictTable to_integral(const StrictRatTable& R) {
    StrictTable out;
    out.k = R.k;
    out.m = R.m;
    out.n = R.n;
    for (const auto& [X, v] : R.coeffs) {
        Vec w;
        w.reserve(v.size());
        for (const Rat& c : v) {
            if (!c.is_integral())
                throw RankError("to_integral: non-integral coefficient");
            w.push_back(c.num());
        }
        out.set(X, std::move(w));
    }
    return out;
}

}  // namespace numap
