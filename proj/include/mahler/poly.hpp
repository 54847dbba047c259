#pragma once

#include <vector>

#include "mahler/constants.hpp"

namespace mahler {

// dense polynomial over Q, index = exponent, no trailing zeros
using QPoly = std::vector<Rat>;

namespace qpoly {
void trim(QPoly &a);
QPoly add(const QPoly &a, const QPoly &b);
QPoly sub(const QPoly &a, const QPoly &b);
QPoly mul(const QPoly &a, const QPoly &b);
void divmod(const QPoly &a, const QPoly &b, QPoly &q, QPoly &r);
QPoly monic(const QPoly &a);
QPoly gcd(QPoly a, QPoly b);
QPoly derivative(const QPoly &a);
// squarefree factors (f_1, f_2, ...) with a = c * prod f_i^i
std::vector<QPoly> squarefree(const QPoly &a);
} // namespace qpoly

// dense polynomial over the constant ring
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<AlgConst> coeffs);
  static Poly constant(const AlgConst &c);
  static Poly monomial(const AlgConst &c, long e);
  static Poly x_minus(const AlgConst &a);
  static Poly from_q(const QPoly &q);

  long degree() const { return (long)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<AlgConst> &coeffs() const { return c_; }
  AlgConst coeff(long i) const;
  const AlgConst &lead() const { return c_.back(); }

  bool is_rational() const;
  QPoly to_q() const;

  AlgConst eval(const AlgConst &a) const;
  // coefficients of P(a + t) in t
  Poly taylor_shift(const AlgConst &a) const;
  Poly derivative() const;
  Poly scaled(const AlgConst &s) const;
  // lowest exponent with nonzero coefficient; divides it out
  long strip_x(Poly &rest) const;

  friend Poly operator+(const Poly &a, const Poly &b);
  friend Poly operator-(const Poly &a, const Poly &b);
  friend Poly operator*(const Poly &a, const Poly &b);
  friend bool operator==(const Poly &a, const Poly &b);
  Poly operator-() const;

  // requires an invertible leading coefficient of b
  static void divmod(const Poly &a, const Poly &b, Poly &q, Poly &r);

private:
  void trim();
  std::vector<AlgConst> c_;
};

} // namespace mahler
