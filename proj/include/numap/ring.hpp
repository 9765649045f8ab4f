#ifndef NUMAP_RING_HPP
#define NUMAP_RING_HPP

#include <span>
#include <utility>
#include <vector>

#include "numap/int.hpp"

namespace numap {

Int factorial(unsigned n);

/// Binomial coefficient r over k for arbitrary integer r, via the falling
/// factorial r(r-1)...(r-k+1)/k!. The division is exact for every integer r;
/// inexactness would mean an arithmetic bug and raises std::logic_error.
Int binom(const Int& r, unsigned k);

/// Both closed forms of the alternating binomial identity
///   sum_{k=m}^{n} (-1)^k C(r,k) C(k,m)  ==  (-1)^n C(r,m) C(r-m-1, n-m).
/// Returns (LHS, RHS); callers assert equality. Requires m <= n.
std::pair<Int, Int> lemma_binomial(const Int& r, unsigned m, unsigned n);

/// Stirling number of the second kind S(m, j).
Int stirling2(unsigned m, unsigned j);

/// Integer-valued polynomial in the binomial basis:
///   p(x) = sum_j c_j * C(x, j).
/// Canonical form: no trailing zero coefficient; the zero polynomial has an
/// empty coefficient list. Equality is structural.
class NumPoly {
  public:
    NumPoly() = default;
    explicit NumPoly(std::vector<Int> coeffs);

    static NumPoly constant(Int c);
    static NumPoly x(); // the identity map, C(x,1)

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Number of coefficients; degree is size()-1 for nonzero polynomials.
    std::size_t size() const { return c_.size(); }

    Int operator()(const Int& a) const;

    NumPoly operator-() const;
    friend NumPoly operator+(const NumPoly& p, const NumPoly& q);
    friend NumPoly operator-(const NumPoly& p, const NumPoly& q);
    friend NumPoly operator*(const Int& r, const NumPoly& p);
    /// Product computed by evaluation at 0..deg p + deg q and interpolation.
    friend NumPoly operator*(const NumPoly& p, const NumPoly& q);

    friend bool operator==(const NumPoly& p, const NumPoly& q) = default;

  private:
    std::vector<Int> c_;
};

/// Newton forward differences: from (f(0), ..., f(d)) to the unique NumPoly
/// of degree <= d matching those values. Inverse of evaluation at 0..d.
NumPoly interpolate(std::span<const Int> values);

/// The map a -> C(p(a), k) as a NumPoly, of degree <= k * deg p.
NumPoly binom(const NumPoly& p, unsigned k);

}  // namespace numap

#endif
