#include "numap/augment.hpp"

#include <bit>
#include <cstdint>

#include "numap/errors.hpp"
#include "numap/ring.hpp"

namespace numap {

TruncPoly TruncPoly::one(std::size_t k, unsigned n) {
    return monomial(MultiSet::empty(k), n);
}

TruncPoly TruncPoly::monomial(const MultiSet& X, unsigned n, Int c) {
    TruncPoly out(X.k(), n);
    out.add_term(X, c);
    return out;
}

Int TruncPoly::coeff(const MultiSet& X) const {
    auto it = coeffs_.find(X);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void TruncPoly::add_term(const MultiSet& X, const Int& c) {
    if (X.k() != k_) throw RankError("trunc poly: monomial rank mismatch");
    if (c.is_zero() || X.cardinality() > n_) return;
    auto [it, inserted] = coeffs_.try_emplace(X, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void TruncPoly::require_compatible(const TruncPoly& p, const TruncPoly& q) {
    if (p.k_ != q.k_ || p.n_ != q.n_)
        throw RankError("trunc poly: mixed ranks or truncation orders");
}

TruncPoly TruncPoly::operator-() const {
    TruncPoly out(k_, n_);
    for (const auto& [X, c] : coeffs_) out.coeffs_.emplace(X, -c);
    return out;
}

TruncPoly operator+(const TruncPoly& p, const TruncPoly& q) {
    TruncPoly::require_compatible(p, q);
    TruncPoly out = p;
    for (const auto& [X, c] : q.coeffs_) out.add_term(X, c);
    return out;
}

TruncPoly operator-(const TruncPoly& p, const TruncPoly& q) { return p + (-q); }

TruncPoly operator*(const TruncPoly& p, const TruncPoly& q) {
    TruncPoly::require_compatible(p, q);
    TruncPoly out(p.k_, p.n_);
    for (const auto& [X, c] : p.coeffs_)
        for (const auto& [Y, d] : q.coeffs_) {
            if (X.cardinality() + Y.cardinality() > p.n_) continue;
            out.add_term(X + Y, c * d);
        }
    return out;
}

TruncPoly operator*(const Int& r, const TruncPoly& p) {
    TruncPoly out(p.k_, p.n_);
    for (const auto& [X, c] : p.coeffs_) out.add_term(X, r * c);
    return out;
}

TruncPoly TruncPoly::pow(unsigned e) const {
    TruncPoly out = one(k_, n_);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

TruncPoly one_plus_t_pow(std::size_t k, std::size_t i, const Int& a, unsigned n) {
    if (i >= k) throw RankError("one_plus_t_pow: variable index out of range");
    TruncPoly out(k, n);
    for (unsigned j = 0; j <= n; ++j) {
        std::vector<std::uint32_t> mult(k, 0);
        mult[i] = j;
        out = out + TruncPoly::monomial(MultiSet(std::move(mult)), n, binom(a, j));
    }
    return out;
}

TruncPoly chi_class(std::span<const Int> x, unsigned n) {
    TruncPoly out = TruncPoly::one(x.size(), n);
    for (std::size_t i = 0; i < x.size(); ++i)
        out = out * one_plus_t_pow(x.size(), i, x[i], n);
    return out;
}

TruncPoly dev_class(std::size_t k, std::span<const Vec> xs, unsigned n) {
    const std::size_t t = xs.size();
    if (t >= 63) throw RankError("dev_class: argument list too long");
    for (const Vec& x : xs)
        if (x.size() != k) throw RankError("dev_class: vector rank mismatch");
    TruncPoly out(k, n);
    for (std::uint64_t mask = 0; mask < (1ull << t); ++mask) {
        Vec sum = zero_vec(k);
        for (std::size_t i = 0; i < t; ++i)
            if (mask & (1ull << i)) sum = vec_add(sum, xs[i]);
        TruncPoly cls = chi_class(sum, n);
        bool negate = (t - std::popcount(mask)) % 2 != 0;
        out = negate ? out - cls : out + cls;
    }
    return out;
}

TruncPoly scalar_relation_class(const Int& r, std::span<const Int> x, unsigned n) {
    Vec rx;
    rx.reserve(x.size());
    for (const Int& xi : x) rx.push_back(r * xi);
    TruncPoly out = chi_class(rx, n);
    Vec base(x.begin(), x.end());
    for (unsigned m = 0; m <= n; ++m) {
        std::vector<Vec> rep(m, base);
        out = out - binom(r, m) * dev_class(x.size(), rep, n);
    }
    return out;
}

TruncPoly psi_image(const MultiSet& X, unsigned n) {
    const std::size_t k = X.k();
    TruncPoly out = TruncPoly::one(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        if (X[i] == 0) continue;
        Vec ei = zero_vec(k);
        ei[i] = Int(1);
        TruncPoly factor = chi_class(ei, n) - TruncPoly::one(k, n);
        out = out * factor.pow(X[i]);
    }
    return out;
}

Vec UniversalFactor::operator()(const TruncPoly& p) const {
    if (p.k() != k || p.n() != n)
        throw RankError("universal factor: rank or truncation mismatch");
    Vec out = zero_vec(m);
    for (const auto& [X, c] : p.coeffs()) {
        auto it = assign.find(X);
        if (it == assign.end()) continue;
        out = vec_add(out, vec_scale(c, it->second));
    }
    return out;
}

UniversalFactor universal_factor(const NumTable& T) {
    UniversalFactor out;
    out.k = T.k;
    out.m = T.m;
    out.n = T.n;
    out.assign = T.coeffs;
    return out;
}

}  // namespace numap
