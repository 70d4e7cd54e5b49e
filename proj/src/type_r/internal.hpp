#pragma once

#include <vector>

#include "qfano/type_r.hpp"

namespace qfano::type_r::detail {

// Point of Data::ring from its blocks.
std::vector<Rational> ring_point(const std::vector<Rational>& x, const std::vector<Rational>& y, const Rational& r0,
                                 const std::vector<Rational>& r4);

bool vanish(const std::vector<Poly>& polys, const std::vector<Rational>& point);
std::size_t jacobian_rank(const std::vector<Rational>& point);
std::vector<Poly> rf_list();

std::vector<Check> s6_checks();

}  // namespace qfano::type_r::detail
