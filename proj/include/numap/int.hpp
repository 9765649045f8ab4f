#ifndef NUMAP_INT_HPP
#define NUMAP_INT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace numap {

/// Arbitrary-precision signed integer.
///
/// Sign-magnitude representation, base 10^9 limbs, least significant first.
/// All arithmetic is exact; there is no overflow. Values are immutable in
/// spirit: every operation returns a fresh value, so Int is freely shareable
/// across threads.
class Int {
  public:
    Int() = default;
    Int(long long v);                       // NOLINT: implicit by design
    explicit Int(std::string_view decimal); // throws ParseError

    static Int from_string(std::string_view decimal);
    std::string str() const;

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    Int abs() const;

    Int operator-() const;
    Int& operator+=(const Int& o);
    Int& operator-=(const Int& o);
    Int& operator*=(const Int& o);

    friend Int operator+(Int a, const Int& b) { return a += b; }
    friend Int operator-(Int a, const Int& b) { return a -= b; }
    friend Int operator*(const Int& a, const Int& b);

    // Quotient truncated toward zero, remainder with the sign of the dividend.
    static void divmod(const Int& a, const Int& b, Int& q, Int& r);
    friend Int operator/(const Int& a, const Int& b);
    friend Int operator%(const Int& a, const Int& b);

    // Exact quotient; throws std::logic_error if b does not divide *this.
    Int div_exact(const Int& b) const;

    static Int gcd(const Int& a, const Int& b);

    friend bool operator==(const Int& a, const Int& b) = default;
    friend std::strong_ordering operator<=>(const Int& a, const Int& b);

    friend std::ostream& operator<<(std::ostream& os, const Int& v);

  private:
    int sign_ = 0;                   // -1, 0, +1
    std::vector<std::uint32_t> mag_; // empty iff sign_ == 0, no leading zero limb

    void normalize();
};

/// Exact rational, always in lowest terms with positive denominator.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(Int n) : num_(std::move(n)), den_(1) {} // NOLINT: implicit by design
    Rat(Int n, Int d);                          // throws std::logic_error on d == 0

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == Int(1); }

    Rat operator-() const;
    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend bool operator==(const Rat& a, const Rat& b) = default;

    std::string str() const; // "p" when integral, else "p/q"
    static Rat from_string(std::string_view s);

  private:
    Int num_, den_;
    void reduce();
};

}  // namespace numap

#endif
