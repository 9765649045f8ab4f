#include "numap/ring.hpp"

#include <algorithm>

#include "numap/errors.hpp"

namespace numap {

Int factorial(unsigned n) {
    Int out(1);
    for (unsigned i = 2; i <= n; ++i) out *= Int(i);
    return out;
}

Int binom(const Int& r, unsigned k) {
    Int falling(1);
    for (unsigned i = 0; i < k; ++i) falling *= r - Int(i);
    return falling.div_exact(factorial(k));
}

std::pair<Int, Int> lemma_binomial(const Int& r, unsigned m, unsigned n) {
    if (m > n) throw RankError("lemma_binomial: requires m <= n");
    Int lhs(0);
    for (unsigned k = m; k <= n; ++k) {
        Int term = binom(r, k) * binom(Int(k), m);
        lhs += (k % 2 == 0) ? term : -term;
    }
    Int rhs = binom(r, m) * binom(r - Int(m) - Int(1), n - m);
    if (n % 2 != 0) rhs = -rhs;
    return {lhs, rhs};
}

Int stirling2(unsigned m, unsigned j) {
    if (j > m) return Int(0);
    // S(i, j) for the current row i, built up from S(0, 0) = 1.
    std::vector<Int> row(j + 1, Int(0));
    row[0] = Int(1);
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned col = std::min(i, j); col > 0; --col)
            row[col] = Int(col) * row[col] + row[col - 1];
        row[0] = Int(0);
    }
    return row[j];
}

NumPoly::NumPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

NumPoly NumPoly::constant(Int c) { return NumPoly({std::move(c)}); }

NumPoly NumPoly::x() { return NumPoly({Int(0), Int(1)}); }

Int NumPoly::operator()(const Int& a) const {
    Int out(0);
    for (std::size_t j = 0; j < c_.size(); ++j)
        out += c_[j] * binom(a, static_cast<unsigned>(j));
    return out;
}

NumPoly NumPoly::operator-() const {
    std::vector<Int> out;
    out.reserve(c_.size());
    for (const Int& c : c_) out.push_back(-c);
    return NumPoly(std::move(out));
}

NumPoly operator+(const NumPoly& p, const NumPoly& q) {
    std::vector<Int> out(std::max(p.c_.size(), q.c_.size()), Int(0));
    for (std::size_t j = 0; j < p.c_.size(); ++j) out[j] += p.c_[j];
    for (std::size_t j = 0; j < q.c_.size(); ++j) out[j] += q.c_[j];
    return NumPoly(std::move(out));
}

NumPoly operator-(const NumPoly& p, const NumPoly& q) { return p + (-q); }

NumPoly operator*(const Int& r, const NumPoly& p) {
    std::vector<Int> out;
    out.reserve(p.c_.size());
    for (const Int& c : p.c_) out.push_back(r * c);
    return NumPoly(std::move(out));
}

NumPoly interpolate(std::span<const Int> values) {
    std::vector<Int> diffs(values.begin(), values.end());
    std::vector<Int> out;
    out.reserve(diffs.size());
    for (std::size_t level = 0; level < values.size(); ++level) {
        out.push_back(diffs[0]);
        for (std::size_t i = 0; i + level + 1 < values.size(); ++i)
            diffs[i] = diffs[i + 1] - diffs[i];
    }
    return NumPoly(std::move(out));
}

NumPoly operator*(const NumPoly& p, const NumPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::size_t points = p.size() + q.size() - 1; // deg p + deg q + 1
    std::vector<Int> values;
    values.reserve(points);
    for (std::size_t a = 0; a < points; ++a) {
        Int at(static_cast<long long>(a));
        values.push_back(p(at) * q(at));
    }
    return interpolate(values);
}

NumPoly binom(const NumPoly& p, unsigned k) {
    std::size_t deg = p.is_zero() ? 0 : p.size() - 1;
    std::size_t points = k * deg + 1;
    std::vector<Int> values;
    values.reserve(points);
    for (std::size_t a = 0; a < points; ++a)
        values.push_back(binom(p(Int(static_cast<long long>(a))), k));
    return interpolate(values);
}

}  // namespace numap
