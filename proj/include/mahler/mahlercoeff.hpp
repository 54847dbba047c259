#pragma once

#include <vector>

#include "mahler/constants.hpp"

namespace mahler {

// universal coefficient of (x-1)^(m-k) in (1 + x + ... + x^(p^n - 1))^(-m) at x = 1
Rat v_taylor(int m, int k, int n, int p);
// same value from the restricted-partition sum
Rat v_partition(int m, int k, int n, int p);
// memoized production path (Taylor route)
Rat vcoeff(int m, int k, int n, int p);

// partitions of k with all parts < bound, weakly decreasing parts,
// listed in descending lexicographic order
std::vector<std::vector<int>> partitions_bounded(int k, long bound);

// pointwise coefficient vcoeff(m,k,n,p) * a^(k - m p^n)
AlgConst v_at(const Point &a, int m, int k, int n, int p);
AlgConst v_at(const AlgConst &a, int m, int k, int n, int p);

} // namespace mahler
