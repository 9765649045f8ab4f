#include "numap/int.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <utility>

#include "numap/errors.hpp"

namespace numap {

namespace {

constexpr std::uint32_t kBase = 1'000'000'000u;
constexpr int kBaseDigits = 9;

using Mag = std::vector<std::uint32_t>;

void trim(Mag& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// -1, 0, +1 comparing magnitudes.
int cmp_mag(const Mag& a, const Mag& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

Mag add_mag(const Mag& a, const Mag& b) {
    const Mag& lo = a.size() < b.size() ? a : b;
    const Mag& hi = a.size() < b.size() ? b : a;
    Mag out(hi.size() + 1, 0);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint32_t s = hi[i] + carry;
        if (i < lo.size()) s += lo[i];
        carry = s >= kBase ? 1 : 0;
        out[i] = carry ? s - kBase : s;
    }
    out[hi.size()] = carry;
    trim(out);
    return out;
}

// Requires a >= b.
Mag sub_mag(const Mag& a, const Mag& b) {
    Mag out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        borrow = d < 0 ? 1 : 0;
        out[i] = static_cast<std::uint32_t>(d < 0 ? d + kBase : d);
    }
    trim(out);
    return out;
}

Mag mul_mag(const Mag& a, const Mag& b) {
    if (a.empty() || b.empty()) return {};
    Mag out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] +
                                static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        std::size_t pos = i + b.size();
        while (carry) {
            std::uint64_t cur = out[pos] + carry;
            out[pos] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
            ++pos;
        }
    }
    trim(out);
    return out;
}

Mag mul_small(const Mag& a, std::uint32_t s) {
    if (a.empty() || s == 0) return {};
    Mag out(a.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * s + carry;
        out[i] = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
    }
    out[a.size()] = static_cast<std::uint32_t>(carry);
    trim(out);
    return out;
}

// Schoolbook long division on magnitudes. Per-digit binary search is slower
// than a two-limb estimate but has no correction cases to get wrong, and the
// operands here stay small.
void divmod_mag(const Mag& a, const Mag& b, Mag& q, Mag& r) {
    q.assign(a.size(), 0);
    r.clear();
    for (std::size_t i = a.size(); i-- > 0;) {
        r.insert(r.begin(), a[i]);
        trim(r);
        if (cmp_mag(r, b) < 0) continue;
        std::uint32_t lo = 1, hi = kBase - 1;
        while (lo < hi) {
            std::uint32_t mid = lo + (hi - lo + 1) / 2;
            if (cmp_mag(mul_small(b, mid), r) <= 0)
                lo = mid;
            else
                hi = mid - 1;
        }
        q[i] = lo;
        r = sub_mag(r, mul_small(b, lo));
    }
    trim(q);
}

}  // namespace

void Int::normalize() {
    trim(mag_);
    if (mag_.empty()) sign_ = 0;
}

Int::Int(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long u =
        v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
              : static_cast<unsigned long long>(v);
    while (u) {
        mag_.push_back(static_cast<std::uint32_t>(u % kBase));
        u /= kBase;
    }
}

Int::Int(std::string_view s) { *this = from_string(s); }

Int Int::from_string(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("empty integer literal");
    for (char c : s)
        if (c < '0' || c > '9')
            throw ParseError("bad integer literal: non-digit character");
    Int out;
    for (std::size_t end = s.size(); end > 0;) {
        std::size_t begin = end >= kBaseDigits ? end - kBaseDigits : 0;
        std::uint32_t limb = 0;
        for (std::size_t i = begin; i < end; ++i)
            limb = limb * 10 + static_cast<std::uint32_t>(s[i] - '0');
        out.mag_.push_back(limb);
        end = begin;
    }
    trim(out.mag_);
    out.sign_ = out.mag_.empty() ? 0 : (neg ? -1 : 1);
    return out;
}

std::string Int::str() const {
    if (sign_ == 0) return "0";
    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(mag_.back());
    for (std::size_t i = mag_.size() - 1; i-- > 0;) {
        std::string limb = std::to_string(mag_[i]);
        out += std::string(kBaseDigits - limb.size(), '0');
        out += limb;
    }
    return out;
}

Int Int::abs() const {
    Int out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

Int Int::operator-() const {
    Int out = *this;
    out.sign_ = -out.sign_;
    return out;
}

Int& Int::operator+=(const Int& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) {
        mag_.clear();
        sign_ = 0;
    } else if (c > 0) {
        mag_ = sub_mag(mag_, o.mag_);
    } else {
        mag_ = sub_mag(o.mag_, mag_);
        sign_ = o.sign_;
    }
    return *this;
}

Int& Int::operator-=(const Int& o) { return *this += -o; }

Int& Int::operator*=(const Int& o) { return *this = *this * o; }

Int operator*(const Int& a, const Int& b) {
    Int out;
    out.sign_ = a.sign_ * b.sign_;
    if (out.sign_ != 0) out.mag_ = mul_mag(a.mag_, b.mag_);
    return out;
}

void Int::divmod(const Int& a, const Int& b, Int& q, Int& r) {
    if (b.sign_ == 0) throw std::logic_error("Int: division by zero");
    Mag qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = a.sign_ * b.sign_;
    r.sign_ = a.sign_;
    q.normalize();
    r.normalize();
}

Int operator/(const Int& a, const Int& b) {
    Int q, r;
    Int::divmod(a, b, q, r);
    return q;
}

Int operator%(const Int& a, const Int& b) {
    Int q, r;
    Int::divmod(a, b, q, r);
    return r;
}

Int Int::div_exact(const Int& b) const {
    Int q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero())
        throw std::logic_error("Int: inexact division where exactness was required");
    return q;
}

Int Int::gcd(const Int& a, const Int& b) {
    Int x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        Int r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::strong_ordering operator<=>(const Int& a, const Int& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

Rat::Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::logic_error("Rat: zero denominator");
    reduce();
}

void Rat::reduce() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = Int(1);
        return;
    }
    Int g = Int::gcd(num_, den_);
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
}

Rat Rat::operator-() const { return {-num_, den_}; }

Rat operator+(const Rat& a, const Rat& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

std::string Rat::str() const {
    return is_integral() ? num_.str() : num_.str() + "/" + den_.str();
}

Rat Rat::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return {Int::from_string(s)};
    Int d = Int::from_string(s.substr(slash + 1));
    if (d.is_zero()) throw ParseError("rational with zero denominator");
    return {Int::from_string(s.substr(0, slash)), std::move(d)};
}

}  // namespace numap
