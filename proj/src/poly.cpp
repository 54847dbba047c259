#include "mahler/poly.hpp"

#include <algorithm>

namespace mahler {

namespace qpoly {

void trim(QPoly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

QPoly add(const QPoly &a, const QPoly &b) {
  QPoly out(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i)
    out[i] += b[i];
  trim(out);
  return out;
}

QPoly sub(const QPoly &a, const QPoly &b) {
  QPoly out(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i)
    out[i] -= b[i];
  trim(out);
  return out;
}

QPoly mul(const QPoly &a, const QPoly &b) {
  if (a.empty() || b.empty())
    return {};
  QPoly out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (size_t k = 0; k < b.size(); ++k)
      out[i + k] += a[i] * b[k];
  }
  trim(out);
  return out;
}

void divmod(const QPoly &a, const QPoly &b, QPoly &q, QPoly &r) {
  if (b.empty())
    throw ZeroDivision("polynomial division by zero");
  r = a;
  trim(r);
  long db = (long)b.size() - 1;
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rat(0));
  Rat inv = 1 / b.back();
  for (long i = (long)r.size() - 1; i >= db; --i) {
    if (r[i] == 0)
      continue;
    Rat c = r[i] * inv;
    q[i - db] = c;
    for (long k = 0; k <= db; ++k)
      r[i - db + k] -= c * b[k];
  }
  trim(r);
  trim(q);
}

QPoly monic(const QPoly &a) {
  if (a.empty())
    return a;
  QPoly out = a;
  Rat inv = 1 / a.back();
  for (auto &x : out)
    x *= inv;
  return out;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

QPoly derivative(const QPoly &a) {
  QPoly out;
  for (size_t i = 1; i < a.size(); ++i)
    out.push_back(a[i] * Rat((long)i));
  trim(out);
  return out;
}

std::vector<QPoly> squarefree(const QPoly &a) {
  // Yun's algorithm
  std::vector<QPoly> out;
  QPoly f = monic(a);
  if (f.size() <= 1)
    return out;
  QPoly fp = derivative(f);
  QPoly g = gcd(f, fp);
  QPoly q, r, b, c, d;
  divmod(f, g, b, r);
  divmod(fp, g, c, r);
  d = sub(c, derivative(b));
  while (b.size() > 1) {
    QPoly h = gcd(b, d);
    out.push_back(h);
    QPoly nb, nc;
    divmod(b, h, nb, r);
    divmod(d, h, nc, r);
    b = nb;
    d = sub(nc, derivative(b));
  }
  while (!out.empty() && out.back().size() <= 1)
    out.pop_back();
  return out;
}

} // namespace qpoly

Poly::Poly(std::vector<AlgConst> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero())
    c_.pop_back();
}

Poly Poly::constant(const AlgConst &c) { return Poly({c}); }

Poly Poly::monomial(const AlgConst &c, long e) {
  std::vector<AlgConst> v(e + 1);
  v[e] = c;
  return Poly(std::move(v));
}

Poly Poly::x_minus(const AlgConst &a) { return Poly({-a, AlgConst(1)}); }

Poly Poly::from_q(const QPoly &q) {
  std::vector<AlgConst> v;
  for (const auto &x : q)
    v.emplace_back(x);
  return Poly(std::move(v));
}

AlgConst Poly::coeff(long i) const {
  if (i < 0 || i >= (long)c_.size())
    return AlgConst();
  return c_[i];
}

bool Poly::is_rational() const {
  for (const auto &x : c_)
    if (!x.is_rational())
      return false;
  return true;
}

QPoly Poly::to_q() const {
  QPoly out;
  for (const auto &x : c_)
    out.push_back(x.to_rat());
  return out;
}

AlgConst Poly::eval(const AlgConst &a) const {
  AlgConst acc;
  for (long i = degree(); i >= 0; --i)
    acc = acc * a + c_[i];
  return acc;
}

Poly Poly::taylor_shift(const AlgConst &a) const {
  // repeated synthetic division by (x - a)
  std::vector<AlgConst> work = c_, out;
  long n = (long)work.size();
  for (long k = 0; k < n; ++k) {
    for (long i = n - 2; i >= k; --i)
      work[i] += work[i + 1] * a;
    out.push_back(work[k]);
  }
  return Poly(std::move(out));
}

Poly Poly::derivative() const {
  std::vector<AlgConst> v;
  for (size_t i = 1; i < c_.size(); ++i)
    v.push_back(c_[i].scaled(Rat((long)i)));
  return Poly(std::move(v));
}

Poly Poly::scaled(const AlgConst &s) const {
  std::vector<AlgConst> v;
  for (const auto &x : c_)
    v.push_back(x * s);
  return Poly(std::move(v));
}

long Poly::strip_x(Poly &rest) const {
  long v = 0;
  while (v < (long)c_.size() && c_[v].is_zero())
    ++v;
  rest = Poly(std::vector<AlgConst>(c_.begin() + std::min<long>(v, c_.size()), c_.end()));
  return v;
}

Poly operator+(const Poly &a, const Poly &b) {
  std::vector<AlgConst> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i)
    v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i)
    v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  std::vector<AlgConst> v;
  for (const auto &x : c_)
    v.push_back(-x);
  return Poly(std::move(v));
}

Poly operator-(const Poly &a, const Poly &b) { return a + (-b); }

Poly operator*(const Poly &a, const Poly &b) {
  if (a.is_zero() || b.is_zero())
    return Poly();
  std::vector<AlgConst> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero())
      continue;
    for (size_t k = 0; k < b.c_.size(); ++k)
      if (!b.c_[k].is_zero())
        v[i + k] += a.c_[i] * b.c_[k];
  }
  return Poly(std::move(v));
}

bool operator==(const Poly &a, const Poly &b) { return (a - b).is_zero(); }

void Poly::divmod(const Poly &a, const Poly &b, Poly &q, Poly &r) {
  if (b.is_zero())
    throw ZeroDivision("polynomial division by zero");
  std::vector<AlgConst> rem = a.c_;
  long db = b.degree();
  std::vector<AlgConst> quo(rem.size() >= b.c_.size() ? rem.size() - b.c_.size() + 1 : 0);
  AlgConst inv = b.lead().inverse();
  for (long i = (long)rem.size() - 1; i >= db; --i) {
    if (rem[i].is_zero())
      continue;
    AlgConst c = rem[i] * inv;
    quo[i - db] = c;
    for (long k = 0; k <= db; ++k)
      if (!b.c_[k].is_zero())
        rem[i - db + k] -= c * b.c_[k];
  }
  q = Poly(std::move(quo));
  r = Poly(std::move(rem));
}

} // namespace mahler
