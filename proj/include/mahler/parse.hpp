#pragma once

#include <string>

#include "mahler/ratfun.hpp"

namespace mahler {

// integers, x, zeta(N), root(r,k) with k a power of p, + - * / ^, parentheses;
// juxtaposition multiplies
RatFun parse_expr(const std::string &s, int p);

} // namespace mahler
