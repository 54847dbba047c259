#include "mahler/ratfun.hpp"

#include "mahler/mahlercoeff.hpp"
#include "mahler/roots.hpp"

namespace mahler {

namespace {

Poly one_poly() { return Poly::constant(AlgConst(1)); }

bool is_one(const Poly &p) { return p.degree() == 0 && p.lead() == AlgConst(1); }

// first n coefficients of 1/e as a power series
std::vector<AlgConst> series_inverse(const std::vector<AlgConst> &e, long n) {
  std::vector<AlgConst> inv(n);
  if (n == 0)
    return inv;
  AlgConst i0 = e.at(0).inverse();
  inv[0] = i0;
  for (long i = 1; i < n; ++i) {
    AlgConst acc;
    for (long j = 1; j <= i && j < (long)e.size(); ++j)
      if (!e[j].is_zero())
        acc += e[j] * inv[i - j];
    inv[i] = -(acc * i0);
  }
  return inv;
}

std::vector<AlgConst> series_mul(const std::vector<AlgConst> &a, const std::vector<AlgConst> &b,
                                 long n) {
  std::vector<AlgConst> out(n);
  for (long i = 0; i < n && i < (long)a.size(); ++i) {
    if (a[i].is_zero())
      continue;
    for (long j = 0; i + j < n && j < (long)b.size(); ++j)
      if (!b[j].is_zero())
        out[i + j] += a[i] * b[j];
  }
  return out;
}

bool is_compound(const std::string &s) {
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-')
      return true;
  return false;
}

std::string coeff_times(const AlgConst &c, const std::string &rest) {
  if (c == AlgConst(1))
    return rest;
  if (c == AlgConst(-1))
    return "-" + rest;
  std::string s = c.str();
  if (is_compound(s))
    s = "(" + s + ")";
  return s + "*" + rest;
}

std::string monomial_str(long e) {
  if (e == 1)
    return "x";
  return "x^" + std::to_string(e);
}

void join(std::string &out, const std::string &term) {
  if (!out.empty() && term[0] != '-')
    out += "+";
  out += term;
}

std::string linear_str(const Point &a) {
  AlgConst v = a.value();
  if (v.is_rational()) {
    Rat q = v.to_rat();
    if (q < 0)
      return "x+" + rat_str(-q);
    return "x-" + rat_str(q);
  }
  return "x-" + a.str();
}

Poly substitute_power(const Poly &p, long P) {
  std::vector<AlgConst> v(p.is_zero() ? 0 : p.degree() * P + 1);
  for (long i = 0; i <= p.degree(); ++i)
    v[i * P] = p.coeff(i);
  return Poly(std::move(v));
}

} // namespace

Rat p_power(int p, long e) { return rat_pow(Rat(p), e); }

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw ZeroDivision("zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = one_poly();
    return;
  }
  if (num_.is_rational() && den_.is_rational()) {
    QPoly n = num_.to_q(), d = den_.to_q();
    QPoly g = qpoly::gcd(n, d);
    QPoly q, r;
    if (g.size() > 1) {
      qpoly::divmod(n, g, q, r);
      n = q;
      qpoly::divmod(d, g, q, r);
      d = q;
    }
    Rat lead = d.back();
    for (auto &c : n)
      c /= lead;
    for (auto &c : d)
      c /= lead;
    num_ = Poly::from_q(n);
    den_ = Poly::from_q(d);
    return;
  }
  if (!(den_.lead() == AlgConst(1))) {
    AlgConst inv = den_.lead().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFun RatFun::inverse() const {
  if (is_zero())
    throw ZeroDivision("inverse of zero");
  return RatFun(den_, num_);
}

RatFun RatFun::pow(long e) const {
  if (e < 0)
    return inverse().pow(-e);
  RatFun out(AlgConst(1)), base = *this;
  while (e > 0) {
    if (e & 1)
      out = out * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return out;
}

RatFun RatFun::scaled(const AlgConst &c) const { return RatFun(num_.scaled(c), den_); }

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun operator+(const RatFun &a, const RatFun &b) {
  if (a.den_ == b.den_)
    return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun &a, const RatFun &b) { return a + (-b); }

RatFun operator*(const RatFun &a, const RatFun &b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun &a, const RatFun &b) { return a * b.inverse(); }

bool operator==(const RatFun &a, const RatFun &b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string poly_str(const Poly &p) {
  std::string out;
  for (long e = p.degree(); e >= 0; --e) {
    const AlgConst &c = p.coeffs()[e];
    if (c.is_zero())
      continue;
    join(out, e == 0 ? c.str() : coeff_times(c, monomial_str(e)));
  }
  return out.empty() ? "0" : out;
}

std::string RatFun::str() const {
  if (is_one(den_))
    return poly_str(num_);
  std::string n = poly_str(num_);
  if (is_compound(n) || n.find('/') != std::string::npos)
    n = "(" + n + ")";
  return n + "/(" + poly_str(den_) + ")";
}

RatFun sigma(const RatFun &f, int p, int n) {
  long P = ipow(p, n);
  return RatFun(substitute_power(f.num(), P), substitute_power(f.den(), P));
}

RatFun delta_lambda(const RatFun &f, int p, int lambda, int n) {
  return sigma(f, p, n).scaled(AlgConst(p_power(p, (long)lambda * n))) - f;
}

RatFun partial_derivation(const RatFun &f) {
  Poly xp = Poly::monomial(AlgConst(1), 1);
  Poly top = xp * (f.num().derivative() * f.den() - f.num() * f.den().derivative());
  return RatFun(top, f.den() * f.den());
}

void PFD::add_laurent(long e, const AlgConst &c) {
  if (c.is_zero())
    return;
  auto it = laurent.find(e);
  if (it == laurent.end()) {
    laurent.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero())
    laurent.erase(it);
}

void PFD::add_pole(const Point &a, int k, const AlgConst &c) {
  if (c.is_zero())
    return;
  auto &tab = poles[a];
  auto it = tab.find(k);
  if (it == tab.end()) {
    tab.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) {
    tab.erase(it);
    if (tab.empty())
      poles.erase(a);
  }
}

AlgConst PFD::laurent_coeff(long e) const {
  auto it = laurent.find(e);
  return it == laurent.end() ? AlgConst() : it->second;
}

AlgConst PFD::pole_coeff(const Point &a, int k) const {
  auto it = poles.find(a);
  if (it == poles.end())
    return AlgConst();
  auto jt = it->second.find(k);
  return jt == it->second.end() ? AlgConst() : jt->second;
}

int PFD::order_at(const Point &a) const {
  auto it = poles.find(a);
  if (it == poles.end() || it->second.empty())
    return 0;
  return it->second.rbegin()->first;
}

PFD PFD::operator-() const { return scaled(AlgConst(-1)); }

PFD &PFD::operator+=(const PFD &o) {
  for (const auto &[e, c] : o.laurent)
    add_laurent(e, c);
  for (const auto &[a, tab] : o.poles)
    for (const auto &[k, c] : tab)
      add_pole(a, k, c);
  return *this;
}

PFD &PFD::operator-=(const PFD &o) { return *this += -o; }

bool operator==(const PFD &a, const PFD &b) {
  if (a.laurent.size() != b.laurent.size() || a.poles.size() != b.poles.size())
    return false;
  return (a - b).is_zero();
}

PFD PFD::scaled(const AlgConst &c) const {
  PFD out;
  if (c.is_zero())
    return out;
  for (const auto &[e, v] : laurent)
    out.add_laurent(e, v * c);
  for (const auto &[a, tab] : poles)
    for (const auto &[k, v] : tab)
      out.add_pole(a, k, v * c);
  return out;
}

std::string PFD::str() const {
  std::string out;
  for (auto it = laurent.rbegin(); it != laurent.rend(); ++it) {
    const auto &[e, c] = *it;
    join(out, e == 0 ? c.str() : coeff_times(c, monomial_str(e)));
  }
  for (const auto &[a, tab] : poles) {
    std::string lin = "(" + linear_str(a) + ")";
    for (auto it = tab.rbegin(); it != tab.rend(); ++it) {
      const auto &[k, c] = *it;
      std::string den = k == 1 ? lin : lin + "^" + std::to_string(k);
      std::string s = c.str();
      if (is_compound(s))
        s = "(" + s + ")";
      join(out, s + "/" + den);
    }
  }
  return out.empty() ? "0" : out;
}

PFD pf_decompose(const RatFun &f, int p) {
  PFD out;
  if (f.is_zero())
    return out;
  const Poly &N = f.num(), &D = f.den();
  Poly D1;
  long v = D.strip_x(D1);
  // polynomial part
  Poly q, r;
  Poly::divmod(N, D, q, r);
  for (long i = 0; i <= q.degree(); ++i)
    out.add_laurent(i, q.coeff(i));
  // polar part at zero
  if (v > 0) {
    auto inv = series_inverse(D1.coeffs(), v);
    auto s = series_mul(N.coeffs(), inv, v);
    for (long i = 0; i < v; ++i)
      out.add_laurent(i - v, s[i]);
  }
  if (D1.degree() == 0)
    return out;
  for (const auto &[alpha, m] : poly_roots(D1, p)) {
    AlgConst a = alpha.value();
    Poly Ns = N.taylor_shift(a), Ds = D.taylor_shift(a);
    std::vector<AlgConst> E;
    for (long i = m; i <= Ds.degree(); ++i)
      E.push_back(Ds.coeff(i));
    for (long i = 0; i < m; ++i)
      if (!Ds.coeff(i).is_zero())
        throw InternalVerificationFailure("pole multiplicity mismatch");
    auto s = series_mul(Ns.coeffs(), series_inverse(E, m), m);
    for (int k = 1; k <= m; ++k)
      out.add_pole(alpha, k, s[m - k]);
  }
  return out;
}

RatFun reconstruct(const PFD &d) {
  std::map<Rat, std::vector<Point>> groups;
  for (const auto &[a, tab] : d.poles)
    groups[a.P > 1 ? a.r : Rat(1)].push_back(a);
  RatFun total;
  for (const auto &[rad, pts] : groups) {
    std::vector<Poly> powers;
    Poly D = one_poly();
    for (const auto &a : pts) {
      Poly lin = Poly::x_minus(a.value()), pw = one_poly();
      for (int i = 0; i < d.order_at(a); ++i)
        pw = pw * lin;
      powers.push_back(pw);
      D = D * pw;
    }
    Poly Nsum;
    for (size_t i = 0; i < pts.size(); ++i) {
      Poly cof = one_poly();
      for (size_t j = 0; j < pts.size(); ++j)
        if (j != i)
          cof = cof * powers[j];
      Poly lin = Poly::x_minus(pts[i].value());
      int m = d.order_at(pts[i]);
      for (const auto &[k, c] : d.poles.at(pts[i])) {
        Poly term = cof.scaled(c);
        for (int t = 0; t < m - k; ++t)
          term = term * lin;
        Nsum = Nsum + term;
      }
    }
    total = total + RatFun(Nsum, D);
  }
  if (!d.laurent.empty()) {
    long lo = std::min<long>(0, d.laurent.begin()->first);
    long hi = d.laurent.rbegin()->first;
    std::vector<AlgConst> num(hi - lo + 1);
    for (const auto &[e, c] : d.laurent)
      num[e - lo] = c;
    total = total + RatFun(Poly(std::move(num)), Poly::monomial(AlgConst(1), -lo));
  }
  return total;
}

PFD sigma(const PFD &f, int p, int n) {
  if (n == 0)
    return f;
  long P = ipow(p, n);
  PFD out;
  for (const auto &[e, c] : f.laurent)
    out.add_laurent(e * P, c);
  for (const auto &[gamma, tab] : f.poles) {
    int mmax = tab.rbegin()->first;
    auto roots = point_roots_iterated(gamma, p, n);
    std::vector<std::vector<AlgConst>> apow(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) {
      AlgConst a = roots[i].value(), acc(1);
      apow[i].push_back(acc);
      for (int k = 1; k <= mmax; ++k) {
        acc *= a;
        apow[i].push_back(acc);
      }
    }
    for (const auto &[m, c] : tab) {
      AlgConst base = gamma.pow(-m) * c;
      for (int k = 1; k <= m; ++k) {
        AlgConst ck = base.scaled(vcoeff(m, k, n, p));
        for (size_t i = 0; i < roots.size(); ++i)
          out.add_pole(roots[i], k, ck * apow[i][k]);
      }
    }
  }
  return out;
}

PFD delta_lambda(const PFD &f, int p, int lambda, int n) {
  return sigma(f, p, n).scaled(AlgConst(p_power(p, (long)lambda * n))) - f;
}

PFD partial_derivation(const PFD &f) {
  PFD out;
  for (const auto &[e, c] : f.laurent)
    out.add_laurent(e, c.scaled(Rat(e)));
  for (const auto &[a, tab] : f.poles) {
    AlgConst av = a.value();
    for (const auto &[k, c] : tab) {
      AlgConst kc = c.scaled(Rat(-k));
      out.add_pole(a, k, kc);
      out.add_pole(a, k + 1, kc * av);
    }
  }
  return out;
}

long trajectory_of(long e, int p) {
  if (e == 0)
    return 0;
  while (e % p == 0)
    e /= p;
  return e;
}

PFD theta_component(const PFD &f, long traj, int p) {
  PFD out;
  for (const auto &[e, c] : f.laurent)
    if (trajectory_of(e, p) == traj)
      out.add_laurent(e, c);
  return out;
}

} // namespace mahler
