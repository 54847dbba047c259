#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "mahler/errors.hpp"

namespace mahler {

using Int = mpz_class;
using Rat = mpq_class;

Rat rat_pow(const Rat &base, long e);
// exact positive k-th root of a positive rational, if it exists
std::optional<Rat> rat_root(const Rat &r, long k);
long smallest_prime_factor(long n);
long euler_phi(long n);
long ipow(long base, int e);
bool is_power_of(long n, long p);
std::string rat_str(const Rat &q);

// element j/N of Q/Z, read as the root of unity exp(2 pi i j/N)
struct QZ {
  long long j = 0;
  long long N = 1;

  static QZ of(long long j, long long N);
  QZ operator+(const QZ &o) const;
  QZ operator-() const;
  QZ times(long long k) const;
  bool is_zero() const { return j == 0; }
  bool operator==(const QZ &o) const { return j == o.j && N == o.N; }
  bool operator<(const QZ &o) const { return N != o.N ? N < o.N : j < o.j; }
};

// element of Q(zeta_M) in the power basis modulo the M-th cyclotomic polynomial
class Cyc {
public:
  Cyc();
  explicit Cyc(const Rat &q);
  Cyc(long M, std::vector<Rat> coeffs);
  static Cyc zeta(long M, long long j);

  long conductor() const { return M_; }
  const std::vector<Rat> &coeffs() const { return c_; }

  Cyc embed(long L) const;
  Cyc galois(long u) const;
  Cyc inverse() const;
  Cyc scaled(const Rat &q) const;
  Cyc minimized() const;

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const { return c_[0]; }

  Cyc operator-() const;
  friend Cyc operator+(const Cyc &a, const Cyc &b);
  friend Cyc operator-(const Cyc &a, const Cyc &b);
  friend Cyc operator*(const Cyc &a, const Cyc &b);
  friend bool operator==(const Cyc &a, const Cyc &b);

  std::string str() const;

private:
  long M_;
  std::vector<Rat> c_;
};

const std::vector<Int> &cyclotomic_poly(long n);

// Sum_t c_t rho^t with rho the positive real P-th root of r and c_t in Q(zeta_M)
class AlgConst {
public:
  AlgConst();
  AlgConst(const Rat &q);
  AlgConst(long q) : AlgConst(Rat(q)) {}
  AlgConst(int q) : AlgConst(Rat(q)) {}
  explicit AlgConst(const Cyc &c);
  static AlgConst zeta(long N, long long j);
  static AlgConst radical(const Rat &r, long P);
  static AlgConst from_terms(long M, const Rat &r, long P, std::vector<Cyc> terms);

  long conductor() const { return M_; }
  const Rat &radicand() const { return r_; }
  long radical_index() const { return P_; }
  const std::vector<Cyc> &terms() const { return t_; }

  AlgConst embed(long M, const Rat &r, long P) const;
  AlgConst inverse() const;
  AlgConst pow(long e) const;
  AlgConst galois(long u, long b) const;
  AlgConst scaled(const Rat &q) const;

  bool is_zero() const;
  bool is_rational() const;
  Rat to_rat() const;

  AlgConst operator-() const;
  AlgConst &operator+=(const AlgConst &o);
  AlgConst &operator-=(const AlgConst &o);
  AlgConst &operator*=(const AlgConst &o);
  friend AlgConst operator+(AlgConst a, const AlgConst &b) { return a += b; }
  friend AlgConst operator-(AlgConst a, const AlgConst &b) { return a -= b; }
  friend AlgConst operator*(const AlgConst &a, const AlgConst &b);
  friend AlgConst operator/(const AlgConst &a, const AlgConst &b) {
    return a * b.inverse();
  }
  friend bool operator==(const AlgConst &a, const AlgConst &b);

  std::string str() const;

private:
  void canon();
  long M_;
  Rat r_;
  long P_;
  std::vector<Cyc> t_;
};

// zeta * r^(1/P), r a positive rational that is not a perfect q-th power for
// the prime q dividing P; (z, r, P) is canonical
struct Point {
  QZ z;
  Rat r = 1;
  long P = 1;

  static Point make(QZ z, Rat r, long P);
  static Point one() { return Point{}; }
  static Point root_of_unity(long long j, long long N) {
    return make(QZ::of(j, N), 1, 1);
  }
  static Point rational(const Rat &q);

  bool is_torsion() const { return r == 1; }
  AlgConst value() const;
  AlgConst pow(long e) const;
  std::string str() const;

  bool operator==(const Point &o) const {
    return z == o.z && P == o.P && r == o.r;
  }
  bool operator<(const Point &o) const;
};

std::optional<long long> root_of_unity_order(const Point &x);
Point point_power_p(const Point &x, int p, int n = 1);
std::vector<Point> point_pth_roots(const Point &x, int p);
// all y with y^(p^n) = x
std::vector<Point> point_roots_iterated(const Point &x, int p, int n);

} // namespace mahler
