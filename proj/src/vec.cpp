#include "numap/vec.hpp"

#include "numap/errors.hpp"

namespace numap {

Vec zero_vec(std::size_t m) { return Vec(m, Int(0)); }

bool is_zero(const Vec& v) {
    for (const Int& c : v)
        if (!c.is_zero()) return false;
    return true;
}

namespace {
void require_same_rank(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw RankError("vector rank mismatch");
}
}  // namespace

Vec vec_add(const Vec& a, const Vec& b) {
    require_same_rank(a, b);
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_same_rank(a, b);
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec vec_neg(const Vec& a) {
    Vec out;
    out.reserve(a.size());
    for (const Int& c : a) out.push_back(-c);
    return out;
}

Vec vec_scale(const Int& r, const Vec& a) {
    Vec out;
    out.reserve(a.size());
    for (const Int& c : a) out.push_back(r * c);
    return out;
}

}  // namespace numap
