#include <doctest.h>

#include <algorithm>
#include <set>

#include "numap/errors.hpp"
#include "numap/multiset.hpp"
#include "numap/ring.hpp"

using namespace numap;

TEST_CASE("enumerate_multisets basic shapes") {
    CHECK(enumerate_multisets(3, 0) ==
          std::vector<MultiSet>{MultiSet::empty(3)});
    CHECK(enumerate_multisets(2, 2) ==
          std::vector<MultiSet>{MultiSet({0, 0}), MultiSet({0, 1}),
                                MultiSet({0, 2}), MultiSet({1, 0}),
                                MultiSet({1, 1}), MultiSet({2, 0})});
    CHECK(enumerate_multisets(3, 2).size() == 10);
}

TEST_CASE("enumerate_multisets counts, order and sub-multiset closure") {
    for (std::size_t k = 0; k <= 4; ++k)
        for (unsigned n = 0; n <= 4; ++n) {
            auto list = enumerate_multisets(k, n);
            CHECK(Int(static_cast<long long>(list.size())) ==
                  binom(Int(static_cast<long long>(k + n)), static_cast<unsigned>(k)));
            CHECK(std::is_sorted(list.begin(), list.end()));
            CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
            std::set<MultiSet> members(list.begin(), list.end());
            for (const MultiSet& X : list) {
                CHECK(X.cardinality() <= n);
                // removing one unit from any coordinate stays inside
                for (std::size_t i = 0; i < k; ++i) {
                    if (X[i] == 0) continue;
                    auto mult = X.mult();
                    --mult[i];
                    CHECK(members.count(MultiSet(mult)) == 1);
                }
            }
        }
}

TEST_CASE("multi_binom products") {
    CHECK(multi_binom(Vec{Int(9), Int(-3)}, MultiSet::empty(2)) == Int(1));
    CHECK(multi_binom(Vec{Int(3), Int(2)}, MultiSet({2, 1})) == Int(6));
    // C(1, m) vanishes for m >= 2
    CHECK(multi_binom(Vec{Int(1), Int(1), Int(1)}, MultiSet({2, 0, 1})) == Int(0));
    CHECK_THROWS_AS(multi_binom(Vec{Int(1)}, MultiSet({1, 1})), RankError);
}

TEST_CASE("multi_binom triangularity at integer points") {
    for (const MultiSet& Q : enumerate_multisets(3, 3)) {
        Vec q;
        for (std::size_t i = 0; i < 3; ++i)
            q.emplace_back(static_cast<long long>(Q[i]));
        CHECK(multi_binom(q, Q) == Int(1));
        for (const MultiSet& X : enumerate_multisets(3, 3)) {
            if (!X.dominated_by(Q))
                CHECK(multi_binom(q, X) == Int(0));
        }
    }
}

TEST_CASE("lexicographic order refines dominance") {
    auto list = enumerate_multisets(3, 4);
    for (const MultiSet& X : list)
        for (const MultiSet& Q : list)
            if (X.dominated_by(Q) && X != Q) CHECK(X < Q);
}

TEST_CASE("repeat_args expands multiplicities in index order") {
    Vec u1{Int(1), Int(0)}, u2{Int(0), Int(1)};
    std::vector<Vec> xs{u1, u2};
    CHECK(repeat_args(MultiSet({0, 0}), xs).empty());
    CHECK(repeat_args(MultiSet({2, 0}), xs) == std::vector<Vec>{u1, u1});
    CHECK(repeat_args(MultiSet({1, 2}), xs) == std::vector<Vec>{u1, u2, u2});
    CHECK_THROWS_AS(repeat_args(MultiSet({1}), xs), RankError);
}
