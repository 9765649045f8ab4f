#include "numap/multiset.hpp"

#include "numap/errors.hpp"
#include "numap/ring.hpp"

namespace numap {

MultiSet MultiSet::single(std::size_t k, std::size_t i) {
    std::vector<std::uint32_t> m(k, 0);
    m.at(i) = 1;
    return MultiSet(std::move(m));
}

unsigned MultiSet::cardinality() const {
    unsigned total = 0;
    for (std::uint32_t mi : m_) total += mi;
    return total;
}

bool MultiSet::full_support() const {
    for (std::uint32_t mi : m_)
        if (mi == 0) return false;
    return true; // vacuously full for k == 0
}

bool MultiSet::dominated_by(const MultiSet& q) const {
    if (m_.size() != q.m_.size()) return false;
    for (std::size_t i = 0; i < m_.size(); ++i)
        if (m_[i] > q.m_[i]) return false;
    return true;
}

MultiSet MultiSet::operator+(const MultiSet& o) const {
    if (m_.size() != o.m_.size()) throw RankError("multiset rank mismatch");
    std::vector<std::uint32_t> out(m_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.m_[i];
    return MultiSet(std::move(out));
}

namespace {
void enumerate_rec(std::size_t k, unsigned budget,
                   std::vector<std::uint32_t>& prefix,
                   std::vector<MultiSet>& out) {
    if (prefix.size() == k) {
        out.emplace_back(prefix);
        return;
    }
    for (unsigned m = 0; m <= budget; ++m) {
        prefix.push_back(m);
        enumerate_rec(k, budget - m, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace

std::vector<MultiSet> enumerate_multisets(std::size_t k, unsigned n) {
    std::vector<MultiSet> out;
    std::vector<std::uint32_t> prefix;
    enumerate_rec(k, n, prefix, out);
    return out;
}

Int multi_binom(std::span<const Int> a, const MultiSet& X) {
    if (a.size() != X.k()) throw RankError("multi_binom: rank mismatch");
    Int out(1);
    for (std::size_t i = 0; i < a.size(); ++i) out *= binom(a[i], X[i]);
    return out;
}

std::vector<Vec> repeat_args(const MultiSet& X, std::span<const Vec> xs) {
    if (xs.size() != X.k()) throw RankError("repeat_args: rank mismatch");
    std::vector<Vec> out;
    out.reserve(X.cardinality());
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::uint32_t rep = 0; rep < X[i]; ++rep) out.push_back(xs[i]);
    return out;
}

}  // namespace numap
