#include "numap/natural.hpp"

#include <utility>

#include "numap/errors.hpp"

namespace numap {

namespace {

template <class T>
const T& as(const AlgElem& e, const char* alg) {
    if (const T* p = std::get_if<T>(&e)) return *p;
    throw RankError(std::string("element does not belong to algebra ") + alg);
}

NumAlgebra make_Z() {
    NumAlgebra A;
    A.name = "Z";
    A.zero = Int(0);
    A.one = Int(1);
    A.add = [](const AlgElem& a, const AlgElem& b) -> AlgElem {
        return as<Int>(a, "Z") + as<Int>(b, "Z");
    };
    A.mul = [](const AlgElem& a, const AlgElem& b) -> AlgElem {
        return as<Int>(a, "Z") * as<Int>(b, "Z");
    };
    A.neg = [](const AlgElem& a) -> AlgElem { return -as<Int>(a, "Z"); };
    A.scale = [](const Int& r, const AlgElem& a) -> AlgElem {
        return r * as<Int>(a, "Z");
    };
    A.binom = [](const AlgElem& a, unsigned j) -> AlgElem {
        return binom(as<Int>(a, "Z"), j);
    };
    A.eq = [](const AlgElem& a, const AlgElem& b) {
        return as<Int>(a, "Z") == as<Int>(b, "Z");
    };
    for (long long v = -10; v <= 10; ++v) A.samples.emplace_back(Int(v));
    return A;
}

NumAlgebra make_IntZ() {
    NumAlgebra A;
    A.name = "IntZ";
    A.zero = NumPoly{};
    A.one = NumPoly::constant(Int(1));
    A.add = [](const AlgElem& a, const AlgElem& b) -> AlgElem {
        return as<NumPoly>(a, "IntZ") + as<NumPoly>(b, "IntZ");
    };
    A.mul = [](const AlgElem& a, const AlgElem& b) -> AlgElem {
        return as<NumPoly>(a, "IntZ") * as<NumPoly>(b, "IntZ");
    };
    A.neg = [](const AlgElem& a) -> AlgElem { return -as<NumPoly>(a, "IntZ"); };
    A.scale = [](const Int& r, const AlgElem& a) -> AlgElem {
        return r * as<NumPoly>(a, "IntZ");
    };
    A.binom = [](const AlgElem& a, unsigned j) -> AlgElem {
        return binom(as<NumPoly>(a, "IntZ"), j);
    };
    A.eq = [](const AlgElem& a, const AlgElem& b) {
        return as<NumPoly>(a, "IntZ") == as<NumPoly>(b, "IntZ");
    };
    // Constants, the generic point x, binomials and a few mixtures.
    for (long long c = -3; c <= 3; ++c)
        A.samples.emplace_back(NumPoly::constant(Int(c)));
    A.samples.emplace_back(NumPoly::x());
    A.samples.emplace_back(-NumPoly::x());
    A.samples.emplace_back(NumPoly({Int(0), Int(2)}));
    A.samples.emplace_back(NumPoly({Int(1), Int(1)}));
    A.samples.emplace_back(NumPoly({Int(0), Int(0), Int(1)}));
    A.samples.emplace_back(NumPoly({Int(0), Int(1), Int(2)}));
    A.samples.emplace_back(NumPoly({Int(2), Int(-1), Int(3)}));
    A.samples.emplace_back(NumPoly({Int(0), Int(0), Int(0), Int(1)}));
    A.samples.emplace_back(NumPoly({Int(-1), Int(2), Int(0), Int(5)}));
    A.samples.emplace_back(NumPoly({Int(4), Int(0), Int(-2)}));
    A.samples.emplace_back(NumPoly({Int(0), Int(-3), Int(1)}));
    A.samples.emplace_back(NumPoly({Int(1), Int(0), Int(0), Int(-1)}));
    A.samples.emplace_back(NumPoly({Int(-2), Int(4), Int(1), Int(2)}));
    return A;
}

}  // namespace

const NumAlgebra& algebra_Z() {
    static const NumAlgebra A = make_Z();
    return A;
}

NumAlgebra algebra_Zr(std::size_t r) {
    NumAlgebra A;
    A.name = "Z^" + std::to_string(r);
    const char* nm = "Z^r";
    auto check = [r, nm](const AlgElem& e) -> const Vec& {
        const Vec& v = as<Vec>(e, nm);
        if (v.size() != r) throw RankError("Z^r element of wrong rank");
        return v;
    };
    A.zero = zero_vec(r);
    A.one = Vec(r, Int(1));
    A.add = [check](const AlgElem& a, const AlgElem& b) -> AlgElem {
        return vec_add(check(a), check(b));
    };
    A.mul = [check, r](const AlgElem& a, const AlgElem& b) -> AlgElem {
        const Vec& x = check(a);
        const Vec& y = check(b);
        Vec out;
        out.reserve(r);
        for (std::size_t i = 0; i < r; ++i) out.push_back(x[i] * y[i]);
        return out;
    };
    A.neg = [check](const AlgElem& a) -> AlgElem { return vec_neg(check(a)); };
    A.scale = [check](const Int& s, const AlgElem& a) -> AlgElem {
        return vec_scale(s, check(a));
    };
    A.binom = [check, r](const AlgElem& a, unsigned j) -> AlgElem {
        const Vec& x = check(a);
        Vec out;
        out.reserve(r);
        for (std::size_t i = 0; i < r; ++i) out.push_back(binom(x[i], j));
        return out;
    };
    A.eq = [check](const AlgElem& a, const AlgElem& b) {
        return check(a) == check(b);
    };
    // 5^r grows fast; a small centered grid keeps >= 20 samples for r <= 2.
    long long range = r <= 2 ? 2 : 1;
    std::vector<long long> cur(r, -range);
    while (true) {
        Vec v;
        v.reserve(r);
        for (long long c : cur) v.emplace_back(c);
        A.samples.emplace_back(std::move(v));
        std::size_t pos = 0;
        while (pos < r && cur[pos] == range) cur[pos++] = -range;
        if (pos == r) break;
        ++cur[pos];
    }
    return A;
}

const NumAlgebra& algebra_IntZ() {
    static const NumAlgebra A = make_IntZ();
    return A;
}

NumAlgebra algebra_by_name(std::string_view name) {
    if (name == "Z") return algebra_Z();
    if (name == "IntZ") return algebra_IntZ();
    if (name.starts_with("Z^")) {
        std::string_view digits = name.substr(2);
        if (!digits.empty() && digits.find_first_not_of("0123456789") ==
                                   std::string_view::npos) {
            std::size_t r = 0;
            for (char c : digits) r = r * 10 + static_cast<std::size_t>(c - '0');
            if (r >= 1 && r <= 8) return algebra_Zr(r);
        }
    }
    throw ParseError("unknown algebra: " + std::string(name));
}

AlgebraHom make_hom(std::string name, NumAlgebra src, NumAlgebra tgt,
                    std::function<AlgElem(const AlgElem&)> map) {
    AlgebraHom h{std::move(name), std::move(src), std::move(tgt), std::move(map)};
    const NumAlgebra& A = h.src;
    const NumAlgebra& B = h.tgt;
    auto expect = [&](bool okay, const char* what) {
        if (!okay)
            throw RankError("hom " + h.name + " violates " + what +
                            " on a sample element");
    };
    expect(B.eq(h.map(A.zero), B.zero), "zero preservation");
    expect(B.eq(h.map(A.one), B.one), "unit preservation");
    for (const AlgElem& a : A.samples) {
        for (const AlgElem& b : A.samples) {
            expect(B.eq(h.map(A.add(a, b)), B.add(h.map(a), h.map(b))), "addition");
            expect(B.eq(h.map(A.mul(a, b)), B.mul(h.map(a), h.map(b))),
                   "multiplication");
        }
        for (long long r = -3; r <= 3; ++r)
            expect(B.eq(h.map(A.scale(Int(r), a)), B.scale(Int(r), h.map(a))),
                   "scalar action");
        for (unsigned j = 0; j <= 4; ++j)
            expect(B.eq(h.map(A.binom(a, j)), B.binom(h.map(a), j)),
                   "binomial operation");
    }
    return h;
}

AlgebraHom hom_id(const NumAlgebra& A) {
    return make_hom("id:" + A.name, A, A, [](const AlgElem& a) { return a; });
}

AlgebraHom hom_ev(const Int& a) {
    return make_hom("ev:" + a.str(), algebra_IntZ(), algebra_Z(),
                    [a](const AlgElem& e) -> AlgElem {
                        return as<NumPoly>(e, "IntZ")(a);
                    });
}

AlgebraHom hom_diag() {
    return make_hom("diag", algebra_Z(), algebra_Zr(2),
                    [](const AlgElem& e) -> AlgElem {
                        const Int& v = as<Int>(e, "Z");
                        return Vec{v, v};
                    });
}

AlgebraHom hom_proj(std::size_t i) {
    if (i < 1 || i > 2) throw RankError("proj: coordinate must be 1 or 2");
    return make_hom("proj:" + std::to_string(i), algebra_Zr(2), algebra_Z(),
                    [i](const AlgElem& e) -> AlgElem {
                        return as<Vec>(e, "Z^2").at(i - 1);
                    });
}

AlgebraHom compose_hom(const AlgebraHom& g, const AlgebraHom& f) {
    if (f.tgt.name != g.src.name)
        throw RankError("compose_hom: target/source algebra mismatch");
    auto fm = f.map;
    auto gm = g.map;
    return make_hom(g.name + "." + f.name, f.src, g.tgt,
                    [fm, gm](const AlgElem& a) { return gm(fm(a)); });
}

AlgebraHom hom_by_name(std::string_view name) {
    if (name == "id") return hom_id(algebra_Z());
    if (name.starts_with("id:")) return hom_id(algebra_by_name(name.substr(3)));
    if (name.starts_with("ev:")) return hom_ev(Int::from_string(name.substr(3)));
    if (name == "diag") return hom_diag();
    if (name.starts_with("proj:")) {
        std::string_view d = name.substr(5);
        if (d == "1") return hom_proj(1);
        if (d == "2") return hom_proj(2);
        throw ParseError("proj: coordinate must be 1 or 2");
    }
    throw ParseError("unknown homomorphism: " + std::string(name));
}

std::vector<AlgElem> extend(const NumTable& T, const NumAlgebra& A,
                            std::span<const AlgElem> a) {
    if (a.size() != T.k) throw RankError("extend: point rank mismatch");
    std::vector<AlgElem> out(T.m, A.zero);
    for (const auto& [X, v] : T.coeffs) {
        AlgElem c = A.one;
        for (std::size_t j = 0; j < T.k; ++j)
            if (X[j] > 0) c = A.mul(c, A.binom(a[j], X[j]));
        for (std::size_t i = 0; i < T.m; ++i)
            out[i] = A.add(out[i], A.scale(v[i], c));
    }
    return out;
}

std::vector<AlgElem> extend_strict(const StrictTable& S, const NumAlgebra& A,
                                   std::span<const AlgElem> a) {
    if (a.size() != S.k) throw RankError("extend_strict: point rank mismatch");
    std::vector<AlgElem> out(S.m, A.zero);
    for (const auto& [X, v] : S.coeffs) {
        AlgElem c = A.one;
        for (std::size_t j = 0; j < S.k; ++j)
            for (std::uint32_t rep = 0; rep < X[j]; ++rep) c = A.mul(c, a[j]);
        for (std::size_t i = 0; i < S.m; ++i)
            out[i] = A.add(out[i], A.scale(v[i], c));
    }
    return out;
}

NaturalityReport check_naturality(const NumTable& T, const AlgebraHom& h,
                                  std::span<const std::vector<AlgElem>> points) {
    NaturalityReport report;
    for (std::size_t p = 0; p < points.size(); ++p) {
        const std::vector<AlgElem>& z = points[p];
        std::vector<AlgElem> upper = extend(T, h.src, z);
        std::vector<AlgElem> via_hom;
        via_hom.reserve(upper.size());
        for (const AlgElem& e : upper) via_hom.push_back(h.map(e));
        std::vector<AlgElem> mapped;
        mapped.reserve(z.size());
        for (const AlgElem& e : z) mapped.push_back(h.map(e));
        std::vector<AlgElem> via_extend = extend(T, h.tgt, mapped);
        ++report.points_checked;
        bool equal = true;
        for (std::size_t i = 0; i < via_hom.size(); ++i)
            if (!h.tgt.eq(via_hom[i], via_extend[i])) equal = false;
        if (!equal)
            report.mismatches.push_back(
                {p, std::move(via_hom), std::move(via_extend)});
    }
    return report;
}

AlgebraAxiomReport check_algebra(const NumAlgebra& A, unsigned max_binom) {
    AlgebraAxiomReport report;
    auto expect = [&](bool okay, const std::string& what) {
        ++report.checks;
        if (!okay) report.failures.push_back(what);
    };
    const auto& S = A.samples;
    for (std::size_t i = 0; i < S.size(); ++i) {
        const AlgElem& a = S[i];
        expect(A.eq(A.add(a, A.zero), a), "a + 0 = a");
        expect(A.eq(A.mul(a, A.one), a), "a * 1 = a");
        expect(A.eq(A.add(a, A.neg(a)), A.zero), "a + (-a) = 0");
        expect(A.eq(A.scale(Int(1), a), a), "1 . a = a");
        expect(A.eq(A.scale(Int(0), a), A.zero), "0 . a = 0");
        expect(A.eq(A.binom(a, 0), A.one), "C(a,0) = 1");
        expect(A.eq(A.binom(a, 1), a), "C(a,1) = a");
        // k! C(a,k) = a(a-1)...(a-k+1), all inside A
        for (unsigned kk = 2; kk <= max_binom; ++kk) {
            AlgElem falling = A.one;
            for (unsigned d = 0; d < kk; ++d)
                falling = A.mul(falling, A.add(a, A.scale(Int(-(long long)d), A.one)));
            expect(A.eq(A.scale(factorial(kk), A.binom(a, kk)), falling),
                   "k! C(a,k) = falling factorial");
        }
        for (std::size_t j = 0; j < S.size(); ++j) {
            const AlgElem& b = S[j];
            expect(A.eq(A.add(a, b), A.add(b, a)), "a + b = b + a");
            expect(A.eq(A.mul(a, b), A.mul(b, a)), "a b = b a");
        }
    }
    // associativity and distributivity on a thinned triple set
    for (std::size_t i = 0; i < S.size(); i += 3)
        for (std::size_t j = 1; j < S.size(); j += 4)
            for (std::size_t l = 2; l < S.size(); l += 5) {
                const AlgElem &a = S[i], &b = S[j], &c = S[l];
                expect(A.eq(A.add(A.add(a, b), c), A.add(a, A.add(b, c))),
                       "(a+b)+c = a+(b+c)");
                expect(A.eq(A.mul(A.mul(a, b), c), A.mul(a, A.mul(b, c))),
                       "(ab)c = a(bc)");
                expect(A.eq(A.mul(a, A.add(b, c)), A.add(A.mul(a, b), A.mul(a, c))),
                       "a(b+c) = ab+ac");
            }
    return report;
}

CounterexampleDemo demo_counterexample(unsigned D) {
    if (D < 2)
        throw RankError("demo_counterexample: degree window must be >= 2");
    CounterexampleDemo demo;
    demo.degree = D;

    auto univariate = [D](const NumTable& T) {
        RationalForm form;
        RationalStrictForm rat = numerical_to_strict_rational(T);
        form.integral = rat.integral;
        form.coeffs.assign(D + 1, Rat{});
        for (const auto& [X, v] : rat.table.coeffs) form.coeffs[X[0]] = v[0];
        return form;
    };

    NumTable binom2;
    binom2.k = 1;
    binom2.m = 1;
    binom2.n = D;
    binom2.set(MultiSet({2}), {Int(1)});
    demo.binom2 = univariate(binom2);

    NumTable square; // x^2 = C(x,1) + 2 C(x,2)
    square.k = 1;
    square.m = 1;
    square.n = D;
    square.set(MultiSet({1}), {Int(1)});
    square.set(MultiSet({2}), {Int(2)});
    demo.square = univariate(square);
    return demo;
}

}  // namespace numap
