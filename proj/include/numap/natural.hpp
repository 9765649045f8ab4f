#ifndef NUMAP_NATURAL_HPP
#define NUMAP_NATURAL_HPP

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "numap/ring.hpp"
#include "numap/tables.hpp"

namespace numap {

/// Carrier element of one of the shipped numerical algebras:
/// Int for Z, Vec for Z^r (componentwise), NumPoly for Int(Z).
using AlgElem = std::variant<Int, Vec, NumPoly>;

/// Runtime descriptor of a numerical algebra: a commutative unital ring
/// with a Z-action and binomial-coefficient operations, plus a finite set
/// of sample elements used for axiom and homomorphism checking.
///
/// Operation tables are pure; descriptors are immutable after construction
/// and safely shareable across threads.
struct NumAlgebra {
    std::string name;
    AlgElem zero, one;
    std::function<AlgElem(const AlgElem&, const AlgElem&)> add, mul;
    std::function<AlgElem(const AlgElem&)> neg;
    std::function<AlgElem(const Int&, const AlgElem&)> scale;
    std::function<AlgElem(const AlgElem&, unsigned)> binom;
    std::function<bool(const AlgElem&, const AlgElem&)> eq;
    std::vector<AlgElem> samples;
};

const NumAlgebra& algebra_Z();
NumAlgebra algebra_Zr(std::size_t r);
const NumAlgebra& algebra_IntZ();
/// "Z", "Z^2", "IntZ"; throws ParseError otherwise.
NumAlgebra algebra_by_name(std::string_view name);

struct AlgebraHom {
    std::string name;
    NumAlgebra src, tgt;
    std::function<AlgElem(const AlgElem&)> map;
};

/// Builds a hom and checks on all sample elements that it preserves 0, 1,
/// addition, multiplication, the Z-action and binomial coefficients; a
/// violated instance raises RankError.
AlgebraHom make_hom(std::string name, NumAlgebra src, NumAlgebra tgt,
                    std::function<AlgElem(const AlgElem&)> map);

AlgebraHom hom_id(const NumAlgebra& A);
/// Evaluation Int(Z) -> Z at the point a.
AlgebraHom hom_ev(const Int& a);
/// Diagonal Z -> Z^2.
AlgebraHom hom_diag();
/// Projection Z^2 -> Z, coordinate i in {1, 2}.
AlgebraHom hom_proj(std::size_t i);
AlgebraHom compose_hom(const AlgebraHom& g, const AlgebraHom& f);
/// "id", "id:<algebra>", "ev:<a>", "diag", "proj:<i>".
AlgebraHom hom_by_name(std::string_view name);

/// The extension of T to the algebra A:
///   component i = sum_X v_X[i] * prod_j C_A(a_j, m_j),
/// with every operation taken inside A. Over Z this is eval_table.
std::vector<AlgElem> extend(const NumTable& T, const NumAlgebra& A,
                            std::span<const AlgElem> a);
/// Monomial-basis analogue (powers instead of binomials).
std::vector<AlgElem> extend_strict(const StrictTable& S, const NumAlgebra& A,
                                   std::span<const AlgElem> a);

struct NaturalityMismatch {
    std::size_t point = 0;
    std::vector<AlgElem> via_hom, via_extend;
};

struct NaturalityReport {
    std::size_t points_checked = 0;
    std::vector<NaturalityMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// For each point z over h's source, compares h applied componentwise to
/// extend(T, src, z) with extend(T, tgt, h(z)).
NaturalityReport check_naturality(const NumTable& T, const AlgebraHom& h,
                                  std::span<const std::vector<AlgElem>> points);

struct AlgebraAxiomReport {
    std::size_t checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Ring axioms plus binom consistency (C(a,0)=1, C(a,1)=a, and
/// k! C(a,k) = a(a-1)...(a-k+1) inside the algebra) on all sample pairs.
AlgebraAxiomReport check_algebra(const NumAlgebra& A, unsigned max_binom = 4);

struct RationalForm {
    std::vector<Rat> coeffs; // monomial basis, degree 0 first
    bool integral = true;
};

struct CounterexampleDemo {
    unsigned degree = 0;
    RationalForm binom2; // x -> C(x,2): non-integral in every monomial window
    RationalForm square; // x -> x^2: the integral control
};

/// The unique degree-<=D monomial representations of C(x,2) and x^2 over Q
/// agreeing with the maps on Z. Requires D >= 2.
CounterexampleDemo demo_counterexample(unsigned D);

}  // namespace numap

#endif
