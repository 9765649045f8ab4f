#ifndef NUMAP_MULTISET_HPP
#define NUMAP_MULTISET_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "numap/vec.hpp"

namespace numap {

/// Multiset over [k] = {1,...,k}, stored as the dense multiplicity vector
/// (m_1,...,m_k). The ordering is lexicographic on the multiplicities, which
/// refines componentwise dominance; this order is normative for enumeration
/// and serialization.
class MultiSet {
  public:
    MultiSet() = default;
    explicit MultiSet(std::vector<std::uint32_t> mult) : m_(std::move(mult)) {}
    static MultiSet empty(std::size_t k) {
        return MultiSet(std::vector<std::uint32_t>(k, 0));
    }
    /// The singleton {i}, zero-based index.
    static MultiSet single(std::size_t k, std::size_t i);

    std::size_t k() const { return m_.size(); }
    std::uint32_t operator[](std::size_t i) const { return m_[i]; }
    const std::vector<std::uint32_t>& mult() const { return m_; }

    /// |X|: number of elements counted with multiplicity.
    unsigned cardinality() const;
    /// True when the support #X is all of [k].
    bool full_support() const;
    /// Componentwise m_i <= q_i.
    bool dominated_by(const MultiSet& q) const;

    MultiSet operator+(const MultiSet& o) const;

    friend auto operator<=>(const MultiSet&, const MultiSet&) = default;

  private:
    std::vector<std::uint32_t> m_;
};

/// All multisets over [k] of cardinality <= n, strictly increasing in
/// lexicographic order. The list has C(k+n, k) members.
std::vector<MultiSet> enumerate_multisets(std::size_t k, unsigned n);

/// C(a, X) = prod_i C(a_i, m_i). Requires a.size() == X.k().
Int multi_binom(std::span<const Int> a, const MultiSet& X);

/// The argument list with xs[i] repeated m_i times, in index order.
/// Requires xs.size() == X.k().
std::vector<Vec> repeat_args(const MultiSet& X, std::span<const Vec> xs);

}  // namespace numap

#endif
