#include <doctest.h>

#include <atomic>
#include <map>
#include <thread>

#include "numap/errors.hpp"
#include "numap/maps.hpp"
#include "numap/ring.hpp"
#include "numap/sampling.hpp"

using namespace numap;

namespace {

MapOracle square_oracle() {
    return {1, 1, [](const Vec& x) { return Vec{x[0] * x[0]}; }};
}

MapOracle linear_oracle() {
    // (x, y) -> 3x - y + 7
    return {2, 1, [](const Vec& x) {
                return Vec{Int(3) * x[0] - x[1] + Int(7)};
            }};
}

// Extraction along the uniqueness route: solve the triangular system
// phi(q) = sum_{X dominated by Q} C(q,X) v_X in lexicographic order.
// Entirely independent of the deviation-based extraction it validates.
NumTable extract_by_solve(const MapOracle& phi, unsigned n) {
    NumTable out;
    out.k = phi.k;
    out.m = phi.m;
    out.n = n;
    std::map<MultiSet, Vec> solved;
    for (const MultiSet& Q : enumerate_multisets(phi.k, n)) {
        Vec q;
        for (std::size_t i = 0; i < phi.k; ++i)
            q.emplace_back(static_cast<long long>(Q[i]));
        Vec v = phi(q);
        for (const auto& [X, vx] : solved) {
            if (!X.dominated_by(Q)) continue;
            v = vec_sub(v, vec_scale(multi_binom(q, X), vx));
        }
        solved.emplace(Q, std::move(v));
    }
    for (auto& [X, v] : solved) out.set(X, std::move(v));
    return out;
}

}  // namespace

TEST_CASE("deviate low arities") {
    MapOracle sq = square_oracle();
    CHECK(deviate(sq, std::vector<Vec>{}) == Vec{Int(0)});         // phi(0)
    CHECK(deviate(sq, std::vector<Vec>{{Int(3)}}) == Vec{Int(9)}); // phi(3)-phi(0)
    CHECK(deviate(sq, std::vector<Vec>{{Int(1)}, {Int(1)}}) == Vec{Int(2)});

    MapOracle lin = linear_oracle();
    Vec x{Int(2), Int(-1)}, y{Int(4), Int(5)};
    CHECK(deviate(lin, std::vector<Vec>{x}) ==
          vec_sub(lin(x), lin(zero_vec(2))));
    CHECK(is_zero(deviate(lin, std::vector<Vec>{x, y})));
    CHECK_THROWS_AS(deviate(sq, std::vector<Vec>{{Int(1), Int(2)}}), RankError);
}

TEST_CASE("extract pinned tables") {
    NumTable sq = extract(square_oracle(), 2);
    CHECK(sq.coeffs.size() == 2);
    REQUIRE(sq.find(MultiSet({1})) != nullptr);
    REQUIRE(sq.find(MultiSet({2})) != nullptr);
    CHECK(*sq.find(MultiSet({1})) == Vec{Int(1)});
    CHECK(*sq.find(MultiSet({2})) == Vec{Int(2)});
    CHECK(sq.degree() == 2);

    MapOracle constant{2, 1, [](const Vec&) { return Vec{Int(-4)}; }};
    NumTable ct = extract(constant, 3);
    CHECK(ct.coeffs.size() == 1);
    CHECK(*ct.find(MultiSet::empty(2)) == Vec{Int(-4)});
    CHECK(ct.degree() == 0);

    for (unsigned d = 1; d <= 4; ++d) {
        MapOracle bin{1, 1, [d](const Vec& x) { return Vec{binom(x[0], d)}; }};
        NumTable bt = extract(bin, 4);
        CHECK(bt.coeffs.size() == 1);
        CHECK(*bt.find(MultiSet({d})) == Vec{Int(1)});
    }
}

TEST_CASE("eval_table pinned values") {
    NumTable sq = extract(square_oracle(), 2);
    CHECK(eval_table(sq, Vec{Int(3)}) == Vec{Int(9)});
    NumTable empty;
    empty.k = 2;
    empty.m = 3;
    empty.n = 1;
    CHECK(eval_table(empty, Vec{Int(5), Int(-2)}) == zero_vec(3));
    CHECK_THROWS_AS(eval_table(sq, Vec{Int(1), Int(2)}), RankError);
}

TEST_CASE("extraction round-trips through table oracles") {
    Rng rng(101);
    for (int iter = 0; iter < 40; ++iter) {
        auto k = static_cast<std::size_t>(rng.uniform(1, 3));
        auto m = static_cast<std::size_t>(rng.uniform(1, 2));
        auto n = static_cast<unsigned>(rng.uniform(0, 4));
        NumTable T = random_table(rng, k, m, n, -9, 9);
        MapOracle phi = table_as_oracle(T);
        CHECK(extract(phi, n) == T);
        CHECK(extract_by_solve(phi, n) == T);
    }
}

TEST_CASE("deviation-based and triangular-solve extraction agree on black boxes") {
    MapOracle mixed{2, 2, [](const Vec& x) {
                        return Vec{x[0] * x[1] + binom(x[0], 2),
                                   x[1] * x[1] - Int(3) * x[0]};
                    }};
    CHECK(extract(mixed, 4) == extract_by_solve(mixed, 4));
    CHECK(extract(square_oracle(), 3) == extract_by_solve(square_oracle(), 3));
}

TEST_CASE("deviations above the degree vanish and top entries are witnessed") {
    Rng rng(202);
    for (int iter = 0; iter < 25; ++iter) {
        auto k = static_cast<std::size_t>(rng.uniform(1, 3));
        auto m = static_cast<std::size_t>(rng.uniform(1, 2));
        auto n = static_cast<unsigned>(rng.uniform(0, 4));
        NumTable T = random_table(rng, k, m, n, -9, 9);
        MapOracle phi = table_as_oracle(T);

        for (int rep = 0; rep < 5; ++rep) {
            std::vector<Vec> xs;
            for (unsigned i = 0; i <= n; ++i)
                xs.push_back(random_vec(rng, k, -5, 5));
            CHECK(is_zero(deviate(phi, xs)));
        }

        std::vector<Vec> e;
        for (std::size_t i = 0; i < k; ++i) {
            Vec v = zero_vec(k);
            v[i] = Int(1);
            e.push_back(std::move(v));
        }
        for (const auto& [X, v] : T.coeffs)
            if (X.cardinality() == n)
                CHECK(deviate(phi, repeat_args(X, e)) == v);
    }
}

TEST_CASE("check_eq1 pinned instances") {
    MapOracle sq = square_oracle();
    auto [l, r] = check_eq1(sq, 2, Int(3), Vec{Int(1)});
    CHECK(l == Vec{Int(9)});
    CHECK(r == Vec{Int(9)});

    MapOracle constant{1, 1, [](const Vec&) { return Vec{Int(5)}; }};
    auto [cl, cr] = check_eq1(constant, 0, Int(-7), Vec{Int(2)});
    CHECK(cl == Vec{Int(5)});
    CHECK(cr == Vec{Int(5)});

    // r = 1 telescopes to phi(x) on the right for any degree bound
    for (unsigned n = 1; n <= 4; ++n) {
        auto [one_l, one_r] = check_eq1(sq, n, Int(1), Vec{Int(4)});
        CHECK(one_l == Vec{Int(16)});
        CHECK(one_r == Vec{Int(16)});
    }
}

TEST_CASE("check_eq2 pinned instances") {
    MapOracle sq = square_oracle();
    // t = n+1 with unit scalars: both sides vanish for a degree-n map
    std::vector<Int> ones{Int(1), Int(1), Int(1)};
    std::vector<Vec> xs{{Int(2)}, {Int(-1)}, {Int(3)}};
    auto [l, r] = check_eq2(sq, 2, ones, xs);
    CHECK(is_zero(l));
    CHECK(is_zero(r));
    CHECK_THROWS_AS(check_eq2(sq, 2, std::vector<Int>{Int(1)}, xs), RankError);
}

TEST_CASE("characterization identities hold on random table oracles") {
    Rng rng(303);
    for (int iter = 0; iter < 60; ++iter) {
        auto k = static_cast<std::size_t>(rng.uniform(1, 3));
        auto m = static_cast<std::size_t>(rng.uniform(1, 2));
        auto n = static_cast<unsigned>(rng.uniform(0, 4));
        MapOracle phi = table_as_oracle(random_table(rng, k, m, n, -9, 9));

        Int r(rng.uniform(-6, 6));
        Vec x = random_vec(rng, k, -4, 4);
        auto [lhs1, rhs1] = check_eq1(phi, n, r, x);
        CHECK(lhs1 == rhs1);

        auto t = static_cast<std::size_t>(rng.uniform(1, 3));
        std::vector<Int> a;
        std::vector<Vec> xs;
        for (std::size_t i = 0; i < t; ++i) {
            a.emplace_back(rng.uniform(-6, 6));
            xs.push_back(random_vec(rng, k, -4, 4));
        }
        auto [lhs2, rhs2] = check_eq2(phi, n, a, xs);
        CHECK(lhs2 == rhs2);
    }
}

TEST_CASE("verify_degree reports") {
    MapOracle lin = linear_oracle();
    CHECK(verify_degree(lin, 1).ok());

    MapOracle sq = square_oracle();
    DegreeSample probe;
    probe.tuples.push_back({Vec{Int(1)}, Vec{Int(1)}});
    DegreeReport r1 = verify_degree(sq, 1, probe);
    REQUIRE(r1.violations.size() == 1);
    CHECK(r1.violations[0].kind == DegreeViolation::Kind::deviation);
    CHECK(r1.violations[0].lhs == Vec{Int(2)});

    SampleOptions wide;
    wide.lo = -5;
    wide.hi = 5;
    CHECK(verify_degree(sq, 2, wide).ok());
}

TEST_CASE("vanishing deviations imply the scalar axiom over Z") {
    Rng rng(404);
    for (int iter = 0; iter < 20; ++iter) {
        StrictTable S;
        S.k = 1;
        S.m = 1;
        S.n = 4;
        for (unsigned d = 0; d <= 4; ++d)
            S.set(MultiSet({d}), Vec{Int(rng.uniform(-9, 9))});
        MapOracle phi = strict_as_oracle(S);
        for (unsigned n = 0; n <= 5; ++n) {
            DegreeSample sample;
            for (int t = 0; t < 40; ++t) {
                std::vector<Vec> tuple;
                for (unsigned i = 0; i <= n; ++i)
                    tuple.push_back(random_vec(rng, 1, -3, 3));
                sample.tuples.push_back(std::move(tuple));
            }
            for (long long r = -10; r <= 10; ++r)
                for (long long x = -3; x <= 3; ++x)
                    sample.pairs.emplace_back(Int(r), Vec{Int(x)});
            DegreeReport report = verify_degree(phi, n, sample);
            if (report.deviation_ok()) CHECK(report.scalar_ok());
        }
    }
}

TEST_CASE("table degree") {
    NumTable T;
    T.k = 2;
    T.m = 1;
    T.n = 3;
    CHECK(T.degree() == 0);
    T.set(MultiSet::empty(2), Vec{Int(4)});
    CHECK(T.degree() == 0);
    T.set(MultiSet({1, 2}), Vec{Int(1)});
    CHECK(T.degree() == 3);
    T.set(MultiSet({1, 2}), Vec{Int(0)}); // dropping the top entry
    CHECK(T.degree() == 0);
    CHECK_THROWS_AS(T.set(MultiSet({2, 2}), Vec{Int(1)}), RankError);
}

TEST_CASE("strict to numerical conversion") {
    StrictTable sq;
    sq.k = 1;
    sq.m = 1;
    sq.n = 2;
    sq.set(MultiSet({2}), Vec{Int(1)});
    NumTable num = strict_to_numerical(sq);
    CHECK(*num.find(MultiSet({1})) == Vec{Int(1)});
    CHECK(*num.find(MultiSet({2})) == Vec{Int(2)});
    CHECK(num.coeffs.size() == 2);

    StrictTable lin;
    lin.k = 2;
    lin.m = 2;
    lin.n = 1;
    lin.set(MultiSet({1, 0}), Vec{Int(3), Int(0)});
    lin.set(MultiSet({0, 1}), Vec{Int(-1), Int(2)});
    lin.set(MultiSet({0, 0}), Vec{Int(7), Int(7)});
    NumTable lin_num = strict_to_numerical(lin);
    CHECK(lin_num.coeffs == lin.coeffs);

    StrictTable c;
    c.k = 1;
    c.m = 1;
    c.n = 0;
    c.set(MultiSet({0}), Vec{Int(9)});
    CHECK(*strict_to_numerical(c).find(MultiSet({0})) == Vec{Int(9)});
}

TEST_CASE("numerical to strict rational conversion") {
    NumTable sq = extract(square_oracle(), 2);
    RationalStrictForm f = numerical_to_strict_rational(sq);
    CHECK(f.integral);
    StrictTable sq_strict = to_integral(f.table);
    CHECK(sq_strict.coeffs.size() == 1);
    CHECK(*sq_strict.find(MultiSet({2})) == Vec{Int(1)});

    NumTable b2;
    b2.k = 1;
    b2.m = 1;
    b2.n = 2;
    b2.set(MultiSet({2}), Vec{Int(1)});
    RationalStrictForm g = numerical_to_strict_rational(b2);
    CHECK_FALSE(g.integral);
    CHECK(*g.table.find(MultiSet({1})) ==
          std::vector<Rat>{Rat(Int(-1), Int(2))});
    CHECK(*g.table.find(MultiSet({2})) == std::vector<Rat>{Rat(Int(1), Int(2))});
    CHECK_THROWS_AS(to_integral(g.table), RankError);

    NumTable c;
    c.k = 3;
    c.m = 2;
    c.n = 1;
    c.set(MultiSet::empty(3), Vec{Int(5), Int(-1)});
    RationalStrictForm h = numerical_to_strict_rational(c);
    CHECK(h.integral);
    CHECK(*h.table.find(MultiSet::empty(3)) ==
          std::vector<Rat>{Rat(Int(5)), Rat(Int(-1))});
}

TEST_CASE("conversion round-trip on random strict tables") {
    Rng rng(505);
    for (int iter = 0; iter < 30; ++iter) {
        auto k = static_cast<std::size_t>(rng.uniform(1, 3));
        auto m = static_cast<std::size_t>(rng.uniform(1, 2));
        auto n = static_cast<unsigned>(rng.uniform(0, 3));
        StrictTable S = random_strict_table(rng, k, m, n, -9, 9);
        RationalStrictForm back =
            numerical_to_strict_rational(strict_to_numerical(S));
        CHECK(back.integral);
        CHECK(to_integral(back.table) == S);
    }
}

TEST_CASE("degenerate ranks: maps out of Z^0") {
    MapOracle point{0, 2, [](const Vec&) { return Vec{Int(3), Int(-1)}; }};
    CHECK(deviate(point, std::vector<Vec>{}) == Vec{Int(3), Int(-1)});
    NumTable T = extract(point, 2);
    CHECK(T.coeffs.size() == 1);
    CHECK(*T.find(MultiSet::empty(0)) == Vec{Int(3), Int(-1)});
    CHECK(eval_table(T, Vec{}) == Vec{Int(3), Int(-1)});
}

TEST_CASE("deviate rejects absurd arity before shifting") {
    MapOracle sq = square_oracle();
    std::vector<Vec> huge(63, Vec{Int(1)});
    CHECK_THROWS_AS(deviate(sq, huge), RankError);
}

TEST_CASE("pure operations are safe under concurrent use") {
    Rng rng(909);
    NumTable T = random_table(rng, 3, 2, 3, -9, 9);
    MapOracle phi = table_as_oracle(T);
    NumTable expected = extract(phi, 3);

    std::vector<std::thread> workers;
    std::atomic<int> mismatches{0};
    for (int w = 0; w < 8; ++w)
        workers.emplace_back([&]() {
            if (extract(phi, 3) != expected) ++mismatches;
            Vec probe{Int(2), Int(-1), Int(3)};
            if (eval_table(T, probe) != phi(probe)) ++mismatches;
        });
    for (std::thread& t : workers) t.join();
    CHECK(mismatches == 0);
}
