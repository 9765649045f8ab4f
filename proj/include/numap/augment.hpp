#ifndef NUMAP_AUGMENT_HPP
#define NUMAP_AUGMENT_HPP

#include <map>
#include <span>

#include "numap/tables.hpp"

namespace numap {

/// Element of Z[t_1,...,t_k]/J_n, the truncated polynomial algebra with
/// every monomial of total degree > n discarded. This is the concrete,
/// finite-rank model of the degree-n augmentation algebra of Z^k.
class TruncPoly {
  public:
    TruncPoly() = default;
    TruncPoly(std::size_t k, unsigned n) : k_(k), n_(n) {}

    static TruncPoly one(std::size_t k, unsigned n);
    static TruncPoly monomial(const MultiSet& X, unsigned n, Int c = Int(1));

    std::size_t k() const { return k_; }
    unsigned n() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<MultiSet, Int>& coeffs() const { return coeffs_; }
    Int coeff(const MultiSet& X) const;

    TruncPoly operator-() const;
    friend TruncPoly operator+(const TruncPoly& p, const TruncPoly& q);
    friend TruncPoly operator-(const TruncPoly& p, const TruncPoly& q);
    friend TruncPoly operator*(const TruncPoly& p, const TruncPoly& q);
    friend TruncPoly operator*(const Int& r, const TruncPoly& p);
    TruncPoly pow(unsigned e) const;

    friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

  private:
    std::size_t k_ = 0;
    unsigned n_ = 0;
    std::map<MultiSet, Int> coeffs_; // |X| <= n, zeros never stored

    void add_term(const MultiSet& X, const Int& c);
    static void require_compatible(const TruncPoly& p, const TruncPoly& q);
};

/// (1 + t_i)^a truncated at order n: sum_{j=0}^{n} C(a,j) t_i^j.
/// The index i is zero-based.
TruncPoly one_plus_t_pow(std::size_t k, std::size_t i, const Int& a, unsigned n);

/// The class of x in the augmentation model: chi([x]) = prod_i (1+t_i)^{x_i}.
TruncPoly chi_class(std::span<const Int> x, unsigned n);

/// Image of the deviation class [x_1 <> ... <> x_t]: the inclusion-exclusion
/// sum of chi classes. Equals prod_i (chi_class(x_i) - 1); for t > n it is
/// zero, which is how chi kills the first generator family of I_n.
TruncPoly dev_class(std::size_t k, std::span<const Vec> xs, unsigned n);

/// chi image of the scalar relation generator
///   [r x] - sum_{m=0}^{n} C(r,m) [<>_m x];
/// identically zero, which is how chi kills the second generator family.
TruncPoly scalar_relation_class(const Int& r, std::span<const Int> x, unsigned n);

/// psi followed by chi on the basis monomial t^X:
/// prod_i (chi_class(e_i) - 1)^{m_i}. Equal to t^X itself, witnessing that
/// psi and chi are mutually inverse on the model's basis.
TruncPoly psi_image(const MultiSet& X, unsigned n);

/// The linear factorization of a degree-n table through the augmentation
/// model: t^X -> v_X extended linearly. Applying it to chi_class(x) recovers
/// the table's evaluation at x.
struct UniversalFactor {
    std::size_t k = 0, m = 0;
    unsigned n = 0;
    std::map<MultiSet, Vec> assign; // sparse; absent basis vectors map to 0

    Vec operator()(const TruncPoly& p) const;
};

UniversalFactor universal_factor(const NumTable& T);

}  // namespace numap

#endif
