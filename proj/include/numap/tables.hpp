#ifndef NUMAP_TABLES_HPP
#define NUMAP_TABLES_HPP

#include <map>
#include <span>
#include <vector>

#include "numap/multiset.hpp"

namespace numap {

/// Sparse multiset-indexed coefficient table for a map Z^k -> Z^m of degree
/// bound n. Zero coefficient vectors are never stored, so equality is
/// structural. The interpretation of the keys (binomial C(a,X) versus
/// monomial a^X) belongs to the derived type.
template <class Scalar>
struct BasisTable {
    std::size_t k = 0, m = 0;
    unsigned n = 0;
    std::map<MultiSet, std::vector<Scalar>> coeffs;

    /// Stores v at X, dropping zero vectors; validates rank and degree.
    void set(const MultiSet& X, std::vector<Scalar> v);
    /// nullptr when the coefficient is zero.
    const std::vector<Scalar>* find(const MultiSet& X) const;
    /// Max |X| over stored entries; 0 for (near-)empty tables.
    unsigned degree() const;

    friend bool operator==(const BasisTable&, const BasisTable&) = default;
};

/// Numerical map table: phi(a) = sum_X C(a,X) v_X.
struct NumTable : BasisTable<Int> {
    friend bool operator==(const NumTable&, const NumTable&) = default;
};

/// Strict polynomial map table: phi(a) = sum_X a^X v_X.
struct StrictTable : BasisTable<Int> {
    friend bool operator==(const StrictTable&, const StrictTable&) = default;
};

/// Monomial-basis table with exact rational coefficients.
struct StrictRatTable : BasisTable<Rat> {
    friend bool operator==(const StrictRatTable&, const StrictRatTable&) = default;
};

/// Evaluation over Z in the binomial basis.
Vec eval_table(const NumTable& T, std::span<const Int> a);
/// Evaluation over Z in the monomial basis.
Vec eval_strict(const StrictTable& S, std::span<const Int> a);

/// Basis change monomial -> binomial via a^m = sum_j S(m,j) j! C(a,j),
/// distributed across variables. Evaluation on Z^k is preserved exactly;
/// the degree bound carries over (it can only drop).
NumTable strict_to_numerical(const StrictTable& S);

struct RationalStrictForm {
    StrictRatTable table;
    /// True exactly when every coefficient is an integer, i.e. when the map
    /// admits a strict table over Z within the same degree bound.
    bool integral = true;
};

/// The unique monomial-basis table with rational coefficients agreeing with
/// T on all of Z^k.
RationalStrictForm numerical_to_strict_rational(const NumTable& T);

/// Narrows an integral rational table back to integers.
/// Requires every coefficient integral.
StrictTable to_integral(const StrictRatTable& R);

}  // namespace numap

#endif
