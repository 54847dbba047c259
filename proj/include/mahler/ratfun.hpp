#pragma once

#include <map>
#include <string>

#include "mahler/poly.hpp"

namespace mahler {

class RatFun {
public:
  RatFun() : num_(), den_(Poly::constant(AlgConst(1))) {}
  RatFun(const AlgConst &c) : num_(Poly::constant(c)), den_(Poly::constant(AlgConst(1))) {}
  RatFun(Poly num, Poly den);
  static RatFun poly(Poly p) { return RatFun(std::move(p), Poly::constant(AlgConst(1))); }
  static RatFun x() { return poly(Poly::monomial(AlgConst(1), 1)); }

  const Poly &num() const { return num_; }
  const Poly &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const { return num_.is_rational() && den_.is_rational(); }

  RatFun inverse() const;
  RatFun pow(long e) const;
  RatFun scaled(const AlgConst &c) const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun &a, const RatFun &b);
  friend RatFun operator-(const RatFun &a, const RatFun &b);
  friend RatFun operator*(const RatFun &a, const RatFun &b);
  friend RatFun operator/(const RatFun &a, const RatFun &b);
  // equality of values (cross multiplication)
  friend bool operator==(const RatFun &a, const RatFun &b);

  std::string str() const;

private:
  void normalize();
  Poly num_, den_;
};

std::string poly_str(const Poly &p);

RatFun sigma(const RatFun &f, int p, int n = 1);
// p^(lambda n) sigma^n(f) - f
RatFun delta_lambda(const RatFun &f, int p, int lambda, int n = 1);
// x d/dx
RatFun partial_derivation(const RatFun &f);

using PoleTable = std::map<Point, std::map<int, AlgConst>>;

// Laurent part plus principal parts c / (x - a)^k at nonzero poles
struct PFD {
  std::map<long, AlgConst> laurent;
  PoleTable poles;

  bool is_zero() const { return laurent.empty() && poles.empty(); }
  void add_laurent(long e, const AlgConst &c);
  void add_pole(const Point &a, int k, const AlgConst &c);
  AlgConst laurent_coeff(long e) const;
  AlgConst pole_coeff(const Point &a, int k) const;
  int order_at(const Point &a) const;

  PFD operator-() const;
  PFD &operator+=(const PFD &o);
  PFD &operator-=(const PFD &o);
  friend PFD operator+(PFD a, const PFD &b) { return a += b; }
  friend PFD operator-(PFD a, const PFD &b) { return a -= b; }
  friend bool operator==(const PFD &a, const PFD &b);
  PFD scaled(const AlgConst &c) const;

  std::string str() const;
};

Rat p_power(int p, long e);

PFD pf_decompose(const RatFun &f, int p);
RatFun reconstruct(const PFD &d);

PFD sigma(const PFD &f, int p, int n = 1);
PFD delta_lambda(const PFD &f, int p, int lambda, int n = 1);
PFD partial_derivation(const PFD &f);

// trajectory label: 0 for the constant class, else i with p not dividing i
long trajectory_of(long e, int p);
PFD theta_component(const PFD &f, long traj, int p);

} // namespace mahler
