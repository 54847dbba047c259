#pragma once

#include <vector>

#include "mahler/poly.hpp"

namespace mahler {

struct RootMult {
  Point point;
  int mult;
};

// all roots of x^k = a as canonical points, radical index a power of p
std::vector<Point> binomial_roots(const Rat &a, long k, int p);

// roots with multiplicity of a rational polynomial with nonzero constant term;
// throws UnsupportedDenominator for factors outside the recognized shapes
std::vector<RootMult> rational_poly_roots(const QPoly &q, int p);

// same over the constant ring, through the product of distinct conjugates
std::vector<RootMult> poly_roots(const Poly &q, int p);

} // namespace mahler
