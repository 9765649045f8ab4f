#ifndef NUMAP_VEC_HPP
#define NUMAP_VEC_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "numap/int.hpp"

namespace numap {

/// Element of Z^k.
using Vec = std::vector<Int>;

Vec zero_vec(std::size_t m);
bool is_zero(const Vec& v);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Int& r, const Vec& a);

}  // namespace numap

#endif
