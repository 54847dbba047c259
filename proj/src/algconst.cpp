#include "mahler/constants.hpp"

#include <algorithm>
#include <numeric>

namespace mahler {

namespace {

// depth reduction: strip exact q-th roots while the index allows it
void reduce_depth(Rat &r, long &P) {
  while (P > 1 && r != 1) {
    long q = smallest_prime_factor(P);
    auto s = rat_root(r, q);
    if (!s)
      break;
    r = *s;
    P /= q;
  }
  if (r == 1)
    P = 1;
}

void common_ring(const AlgConst &a, const AlgConst &b, long &M, Rat &r, long &P) {
  M = std::lcm(a.conductor(), b.conductor());
  if (a.radical_index() == 1) {
    r = b.radicand();
    P = b.radical_index();
  } else if (b.radical_index() == 1) {
    r = a.radicand();
    P = a.radical_index();
  } else if (a.radicand() == b.radicand()) {
    r = a.radicand();
    P = std::lcm(a.radical_index(), b.radical_index());
  } else {
    throw IncompatibleRadicands("radicands " + rat_str(a.radicand()) + " and " +
                                rat_str(b.radicand()) + " do not share a tower");
  }
}

} // namespace

AlgConst::AlgConst() : M_(1), r_(1), P_(1), t_(1, Cyc()) {}

AlgConst::AlgConst(const Rat &q) : M_(1), r_(1), P_(1), t_(1, Cyc(q)) {}

AlgConst::AlgConst(const Cyc &c) : M_(c.conductor()), r_(1), P_(1), t_(1, c) {}

AlgConst AlgConst::zeta(long N, long long j) { return AlgConst(Cyc::zeta(N, j)); }

AlgConst AlgConst::radical(const Rat &r, long P) {
  if (r <= 0)
    throw Error("radicand must be positive");
  Rat rr = r;
  long PP = P;
  reduce_depth(rr, PP);
  if (PP == 1)
    return AlgConst(rr);
  std::vector<Cyc> terms(PP, Cyc());
  terms[1] = Cyc(Rat(1));
  return from_terms(1, rr, PP, std::move(terms));
}

AlgConst AlgConst::from_terms(long M, const Rat &r, long P, std::vector<Cyc> terms) {
  AlgConst out;
  out.M_ = M;
  out.r_ = P == 1 ? Rat(1) : r;
  out.P_ = P;
  out.t_.clear();
  for (auto &c : terms)
    out.t_.push_back(c.embed(M));
  out.canon();
  return out;
}

void AlgConst::canon() {
  if (P_ == 1)
    return;
  for (long t = 1; t < P_; ++t)
    if (!t_[t].is_zero())
      return;
  t_.resize(1);
  P_ = 1;
  r_ = 1;
}

AlgConst AlgConst::embed(long M, const Rat &r, long P) const {
  if (M == M_ && P == P_ && (P == 1 || r == r_))
    return *this;
  if (P % P_ != 0 || (P_ > 1 && r != r_))
    throw IncompatibleRadicands("cannot embed radical ring");
  AlgConst out;
  out.M_ = M;
  out.r_ = P == 1 ? Rat(1) : r;
  out.P_ = P;
  out.t_.assign(P, Cyc(M, {}));
  long step = P / P_;
  for (long t = 0; t < P_; ++t)
    out.t_[t * step] = t_[t].embed(M);
  return out;
}

bool AlgConst::is_zero() const {
  for (const auto &c : t_)
    if (!c.is_zero())
      return false;
  return true;
}

bool AlgConst::is_rational() const {
  for (long t = 1; t < P_; ++t)
    if (!t_[t].is_zero())
      return false;
  return t_[0].is_rational();
}

Rat AlgConst::to_rat() const {
  if (!is_rational())
    throw Error("constant is not rational: " + str());
  return t_[0].rational_value();
}

AlgConst AlgConst::operator-() const {
  AlgConst out = *this;
  for (auto &c : out.t_)
    c = -c;
  return out;
}

AlgConst &AlgConst::operator+=(const AlgConst &o) {
  if (o.is_zero())
    return *this;
  long M, P;
  Rat r;
  common_ring(*this, o, M, r, P);
  AlgConst a = embed(M, r, P);
  AlgConst b = o.embed(M, r, P);
  for (long t = 0; t < P; ++t)
    if (!b.t_[t].is_zero())
      a.t_[t] = a.t_[t] + b.t_[t];
  a.canon();
  *this = std::move(a);
  return *this;
}

AlgConst &AlgConst::operator-=(const AlgConst &o) { return *this += -o; }

AlgConst AlgConst::scaled(const Rat &q) const {
  if (q == 0)
    return AlgConst();
  AlgConst out = *this;
  for (auto &c : out.t_)
    c = c.scaled(q);
  return out;
}

AlgConst operator*(const AlgConst &a, const AlgConst &b) {
  if (b.is_rational())
    return a.scaled(b.to_rat());
  if (a.is_rational())
    return b.scaled(a.to_rat());
  long M, P;
  Rat r;
  common_ring(a, b, M, r, P);
  AlgConst x = a.embed(M, r, P);
  AlgConst y = b.embed(M, r, P);
  std::vector<Cyc> acc(P, Cyc(M, {}));
  for (long t = 0; t < P; ++t) {
    if (x.t_[t].is_zero())
      continue;
    for (long u = 0; u < P; ++u) {
      if (y.t_[u].is_zero())
        continue;
      Cyc prod = x.t_[t] * y.t_[u];
      long idx = t + u;
      if (idx >= P) {
        idx -= P;
        prod = prod.scaled(r);
      }
      acc[idx] = acc[idx] + prod;
    }
  }
  return AlgConst::from_terms(M, r, P, std::move(acc));
}

AlgConst &AlgConst::operator*=(const AlgConst &o) {
  *this = *this * o;
  return *this;
}

bool operator==(const AlgConst &a, const AlgConst &b) { return (a - b).is_zero(); }

AlgConst AlgConst::inverse() const {
  if (is_zero())
    throw ZeroDivision("inverse of zero constant");
  if (P_ == 1)
    return AlgConst(t_[0].inverse());
  // multiplication-by-this matrix over Q(zeta_M), solved for the unit vector
  long P = P_;
  std::vector<std::vector<Cyc>> A(P, std::vector<Cyc>(P + 1, Cyc(M_, {})));
  for (long j = 0; j < P; ++j)
    for (long t = 0; t < P; ++t) {
      if (t_[t].is_zero())
        continue;
      long idx = t + j;
      Cyc v = t_[t];
      if (idx >= P) {
        idx -= P;
        v = v.scaled(r_);
      }
      A[idx][j] = v;
    }
  A[0][P] = Cyc(Rat(1)).embed(M_);
  long row = 0;
  std::vector<long> piv;
  for (long c = 0; c < P && row < P; ++c) {
    long sel = row;
    while (sel < P && A[sel][c].is_zero())
      ++sel;
    if (sel == P)
      continue;
    std::swap(A[sel], A[row]);
    Cyc inv = A[row][c].inverse();
    for (auto &x : A[row])
      x = x * inv;
    for (long rr = 0; rr < P; ++rr) {
      if (rr == row || A[rr][c].is_zero())
        continue;
      Cyc f = A[rr][c];
      for (long k = 0; k <= P; ++k)
        A[rr][k] = A[rr][k] - f * A[row][k];
    }
    piv.push_back(c);
    ++row;
  }
  if ((long)piv.size() < P) {
    // singular: build an annihilating element from a free column
    long free = 0;
    while (std::find(piv.begin(), piv.end(), free) != piv.end())
      ++free;
    std::vector<Cyc> w(P, Cyc(M_, {}));
    w[free] = Cyc(Rat(1)).embed(M_);
    for (size_t k = 0; k < piv.size(); ++k)
      w[piv[k]] = -A[k][free];
    throw NotInvertible("zero divisor in radical ring",
                        from_terms(M_, r_, P, w).str());
  }
  std::vector<Cyc> sol(P, Cyc(M_, {}));
  for (long k = 0; k < P; ++k)
    sol[piv[k]] = A[k][P];
  return from_terms(M_, r_, P, std::move(sol));
}

AlgConst AlgConst::pow(long e) const {
  if (e < 0)
    return inverse().pow(-e);
  AlgConst out(Rat(1)), base = *this;
  while (e > 0) {
    if (e & 1)
      out *= base;
    e >>= 1;
    if (e)
      base *= base;
  }
  return out;
}

AlgConst AlgConst::galois(long u, long b) const {
  long L = std::lcm(M_, P_);
  AlgConst a = embed(L, r_, P_);
  for (long t = 0; t < P_; ++t) {
    if (a.t_[t].is_zero())
      continue;
    a.t_[t] = a.t_[t].galois(u) * Cyc::zeta(L, (long long)t * b * (L / P_));
  }
  return a;
}

std::string AlgConst::str() const {
  // smallest radical index carrying the element
  long P = P_, step = 1;
  while (P > 1) {
    long q = smallest_prime_factor(P);
    bool ok = true;
    for (long t = 0; t < P_ && ok; ++t)
      if (t % (step * q) && !t_[t].is_zero())
        ok = false;
    if (!ok)
      break;
    step *= q;
    P /= q;
  }
  std::string out;
  for (long t = 0; t < P_; t += step) {
    if (t_[t].is_zero())
      continue;
    long tt = t / step;
    Cyc m = t_[t].minimized();
    std::string rad;
    if (tt > 0) {
      rad = "root(" + rat_str(r_) + "," + std::to_string(P) + ")";
      if (tt > 1)
        rad += "^" + std::to_string(tt);
    }
    const auto &c = m.coeffs();
    for (size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0)
        continue;
      std::string fac;
      if (j > 0) {
        fac = "zeta(" + std::to_string(m.conductor()) + ")";
        if (j > 1)
          fac += "^" + std::to_string(j);
      }
      if (!rad.empty())
        fac = fac.empty() ? rad : fac + "*" + rad;
      std::string term;
      if (fac.empty())
        term = rat_str(c[j]);
      else if (c[j] == 1)
        term = fac;
      else if (c[j] == -1)
        term = "-" + fac;
      else
        term = rat_str(c[j]) + "*" + fac;
      if (!out.empty() && term[0] != '-')
        out += "+";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- Point

Point Point::make(QZ z, Rat r, long P) {
  if (r <= 0)
    throw Error("point radicand must be positive");
  reduce_depth(r, P);
  Point out;
  out.z = z;
  out.r = r;
  out.P = P;
  return out;
}

Point Point::rational(const Rat &q) {
  if (q == 0)
    throw Error("zero is not a point");
  if (q < 0)
    return make(QZ::of(1, 2), -q, 1);
  return make(QZ{}, q, 1);
}

AlgConst Point::value() const { return pow(1); }

AlgConst Point::pow(long e) const {
  Cyc zeta = Cyc::zeta(z.N, (long long)(((__int128)z.j * e) % z.N));
  if (P == 1)
    return AlgConst(zeta.scaled(rat_pow(r, e)));
  long q = e / P, t = e % P;
  if (t < 0) {
    t += P;
    q -= 1;
  }
  Cyc c = zeta.scaled(rat_pow(r, q));
  if (t == 0)
    return AlgConst(c);
  std::vector<Cyc> terms(P, Cyc());
  terms[t] = c;
  return AlgConst::from_terms(z.N, r, P, std::move(terms));
}

bool Point::operator<(const Point &o) const {
  if (r != o.r)
    return r < o.r;
  if (P != o.P)
    return P < o.P;
  return z < o.z;
}

std::string Point::str() const {
  if (P == 1 && z == QZ::of(1, 2))
    return rat_str(-r);
  std::string tor;
  if (!z.is_zero()) {
    tor = "zeta(" + std::to_string(z.N) + ")";
    if (z.j > 1)
      tor += "^" + std::to_string(z.j);
  }
  std::string rad;
  if (P > 1)
    rad = "root(" + rat_str(r) + "," + std::to_string(P) + ")";
  else if (r != 1 || tor.empty())
    rad = rat_str(r);
  if (tor.empty())
    return rad;
  if (rad.empty())
    return tor;
  return tor + "*" + rad;
}

std::optional<long long> root_of_unity_order(const Point &x) {
  if (!x.is_torsion())
    return std::nullopt;
  return x.z.N;
}

Point point_power_p(const Point &x, int p, int n) {
  Point cur = x;
  for (int i = 0; i < n; ++i) {
    QZ z = cur.z.times(p);
    Rat r = cur.r;
    long P = cur.P;
    if (P > 1)
      P /= p;
    else
      r = rat_pow(r, p);
    cur = Point::make(z, r, P);
  }
  return cur;
}

std::vector<Point> point_pth_roots(const Point &x, int p) {
  std::vector<Point> out;
  QZ principal = QZ::of(x.z.j, x.z.N * p);
  for (int i = 0; i < p; ++i)
    out.push_back(Point::make(principal + QZ::of(i, p), x.r, x.P * p));
  return out;
}

std::vector<Point> point_roots_iterated(const Point &x, int p, int n) {
  std::vector<Point> layer{x};
  for (int i = 0; i < n; ++i) {
    std::vector<Point> next;
    for (const auto &y : layer)
      for (auto &w : point_pth_roots(y, p))
        next.push_back(std::move(w));
    layer = std::move(next);
  }
  return layer;
}

} // namespace mahler
