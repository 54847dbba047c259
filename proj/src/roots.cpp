#include "mahler/roots.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mahler {

namespace {

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  if (n < 0)
    n = -n;
  for (Int d = 2; d * d <= n && d < 2000000; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::vector<Int> divisors(Int n) {
  if (n < 0)
    n = -n;
  std::vector<Int> out{1};
  for (const Int &q : prime_factors(n)) {
    size_t base = out.size();
    Int pw = 1;
    while (n % q == 0) {
      n /= q;
      pw *= q;
      for (size_t i = 0; i < base; ++i)
        out.push_back(out[i] * pw);
    }
  }
  return out;
}

// integer polynomial with the same roots
std::vector<Int> clear_denominators(const QPoly &q) {
  Int l = 1;
  for (const auto &c : q)
    l = lcm(l, c.get_den());
  std::vector<Int> out;
  for (const auto &c : q)
    out.push_back(c.get_num() * (l / c.get_den()));
  return out;
}

Rat eval_q(const QPoly &q, const Rat &a) {
  Rat acc = 0;
  for (long i = (long)q.size() - 1; i >= 0; --i)
    acc = acc * a + q[i];
  return acc;
}

// distinct nonzero rational roots
std::vector<Rat> rational_roots(const QPoly &q) {
  std::vector<Rat> out;
  QPoly g = q;
  qpoly::trim(g);
  if (g.size() <= 1)
    return out;
  while (g.size() > 1 && g[0] == 0)
    g.erase(g.begin());
  if (g.size() == 2) {
    out.push_back(-g[0] / g[1]);
    return out;
  }
  if (g.size() <= 1)
    return out;
  auto z = clear_denominators(g);
  auto num = divisors(z.front()), den = divisors(z.back());
  for (const auto &u : num)
    for (const auto &v : den) {
      if (gcd(u, v) != 1)
        continue;
      for (int s : {1, -1}) {
        Rat a(u * s, v);
        a.canonicalize();
        if (eval_q(g, a) == 0)
          out.push_back(a);
      }
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool divides_exactly(const QPoly &f, const QPoly &g, QPoly &quo) {
  QPoly r;
  qpoly::divmod(f, g, quo, r);
  return r.empty();
}

QPoly binomial(long k, const Rat &a) {
  QPoly b(k + 1, Rat(0));
  b[0] = -a;
  b[k] = 1;
  return b;
}

// splits a squarefree rational factor into points
void split_squarefree(QPoly f, int p, int mult, std::map<Point, int> &acc) {
  auto add = [&](const Point &pt) { acc[pt] += mult; };
  long k = (long)f.size() - 1;
  // binomial factors x^k - a
  while (k >= 1 && f.size() > 1) {
    long d = (long)f.size() - 1;
    if (k > d)
      k = d;
    std::vector<QPoly> classes(k);
    for (long i = 0; i <= d; ++i) {
      auto &cls = classes[i % k];
      long e = i / k;
      if ((long)cls.size() <= e)
        cls.resize(e + 1, Rat(0));
      cls[e] += f[i];
    }
    QPoly g;
    for (auto &cls : classes) {
      qpoly::trim(cls);
      if (!cls.empty())
        g = g.empty() ? qpoly::monic(cls) : qpoly::gcd(g, cls);
    }
    bool found = false;
    if (g.size() > 1) {
      for (const Rat &a : rational_roots(g)) {
        QPoly quo;
        if (a != 0 && divides_exactly(f, binomial(k, a), quo)) {
          for (const auto &pt : binomial_roots(a, k, p))
            add(pt);
          f = quo;
          found = true;
        }
      }
    }
    if (!found)
      --k;
  }
  if (f.size() <= 1)
    return;
  // cyclotomic factors
  long d = (long)f.size() - 1;
  for (long n = 3; f.size() > 1 && n <= 4 * d * d + 12; ++n) {
    if (euler_phi(n) > (long)f.size() - 1)
      continue;
    QPoly phi;
    for (const auto &c : cyclotomic_poly(n))
      phi.push_back(Rat(c));
    QPoly quo;
    if (divides_exactly(f, phi, quo)) {
      for (long j = 1; j < n; ++j)
        if (std::gcd(j, n) == 1)
          add(Point::root_of_unity(j, n));
      f = quo;
    }
  }
  if (f.size() <= 1)
    return;
  // factor of some binomial: find k with x^k = a mod f
  d = (long)f.size() - 1;
  QPoly fm = qpoly::monic(f);
  QPoly pw{Rat(1)};
  for (long e = 1; e <= 4096; ++e) {
    QPoly nx(pw.size() + 1, Rat(0));
    for (size_t i = 0; i < pw.size(); ++i)
      nx[i + 1] = pw[i];
    if ((long)nx.size() - 1 >= d + 1 || (long)nx.size() - 1 == d) {
      Rat top = nx[d];
      for (long i = 0; i < d; ++i)
        nx[i] -= top * fm[i];
      nx.resize(d);
    }
    qpoly::trim(nx);
    pw = nx;
    if (pw.size() == 1 && pw[0] != 0) {
      Poly fa = Poly::from_q(f);
      int count = 0;
      for (const auto &pt : binomial_roots(pw[0], e, p))
        if (fa.eval(pt.value()).is_zero()) {
          add(pt);
          ++count;
        }
      if (count != d)
        throw UnsupportedDenominator("denominator factor not recognized");
      return;
    }
  }
  throw UnsupportedDenominator("denominator factor not recognized");
}

} // namespace

std::vector<Point> binomial_roots(const Rat &a, long k, int p) {
  if (a == 0 || k < 1)
    throw Error("degenerate binomial");
  long pv = 1, m = k;
  while (m % p == 0) {
    m /= p;
    pv *= p;
  }
  Rat mag = a < 0 ? Rat(-a) : a;
  auto b = rat_root(mag, m);
  if (!b)
    throw UnsupportedAlgebraicPoint("root of x^" + std::to_string(k) + " = " + rat_str(a) +
                                    " is outside the supported constants");
  std::vector<Point> out;
  long shift = a < 0 ? 1 : 0;
  for (long j = 0; j < k; ++j)
    out.push_back(Point::make(QZ::of(2 * j + shift, 2 * k), *b, pv));
  return out;
}

std::vector<RootMult> rational_poly_roots(const QPoly &q, int p) {
  QPoly g = q;
  qpoly::trim(g);
  if (g.empty())
    throw ZeroDivision("zero polynomial has no root set");
  if (g[0] == 0)
    throw Error("polynomial vanishes at zero");
  std::map<Point, int> acc;
  auto parts = qpoly::squarefree(g);
  for (size_t i = 0; i < parts.size(); ++i)
    if (parts[i].size() > 1)
      split_squarefree(parts[i], p, (int)i + 1, acc);
  std::vector<RootMult> out;
  for (const auto &[pt, m] : acc)
    out.push_back({pt, m});
  return out;
}

std::vector<RootMult> poly_roots(const Poly &q, int p) {
  if (q.is_rational())
    return rational_poly_roots(q.to_q(), p);
  long M = 1, P = 1;
  for (const auto &c : q.coeffs()) {
    M = std::lcm(M, c.conductor());
    P = std::lcm(P, c.radical_index());
  }
  long L = std::lcm(M, P);
  std::vector<Poly> conj;
  for (long u = 1; u <= L; ++u) {
    if (std::gcd(u, L) != 1)
      continue;
    for (long b = 0; b < P; ++b) {
      std::vector<AlgConst> cs;
      for (const auto &c : q.coeffs())
        cs.push_back(c.galois(u, b));
      Poly g(std::move(cs));
      if (std::find(conj.begin(), conj.end(), g) == conj.end())
        conj.push_back(std::move(g));
    }
  }
  Poly norm = Poly::constant(AlgConst(1));
  for (const auto &g : conj)
    norm = norm * g;
  if (!norm.is_rational())
    throw UnsupportedDenominator("conjugate product is not rational");
  std::vector<RootMult> out;
  long total = 0;
  for (const auto &rm : rational_poly_roots(norm.to_q(), p)) {
    Poly shifted;
    try {
      shifted = q.taylor_shift(rm.point.value());
    } catch (const IncompatibleRadicands &) {
      continue;
    }
    int m = 0;
    while (m <= shifted.degree() && shifted.coeff(m).is_zero())
      ++m;
    if (m > 0) {
      out.push_back({rm.point, m});
      total += m;
    }
  }
  if (total != q.degree())
    throw UnsupportedDenominator("denominator roots not recognized");
  return out;
}

} // namespace mahler
