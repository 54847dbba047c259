#include "mahler/trees.hpp"

#include <climits>
#include <tuple>
#include <numeric>
#include <set>

namespace mahler {

namespace {

void factor_into(Int n, long sign, std::map<Int, long> &out) {
  if (n < 0)
    n = -n;
  for (Int d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out[d] += sign;
      n /= d;
    }
  if (n > 1)
    out[n] += sign;
}

long mod_inverse(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, b = ((a % m) + m) % m;
  long long aa = b;
  while (aa != 0) {
    long long q = g / aa;
    std::tie(g, aa) = std::make_pair(aa, g - q * aa);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1)
    throw Error("no modular inverse");
  return (long)(((x % m) + m) % m);
}

long long mod_pow(long long b, long e, long long m) {
  long long out = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1)
      out = (__int128)out * b % m;
    b = (__int128)b * b % m;
    e >>= 1;
  }
  return out;
}

// prime-to-p part of a Q/Z element
QZ coprime_part(const QZ &z, int p, long long &Nc) {
  long long N = z.N, pa = 1;
  Nc = N;
  while (Nc % p == 0) {
    Nc /= p;
    pa *= p;
  }
  if (Nc == 1)
    return QZ{};
  long long inv = mod_inverse(pa % Nc, Nc);
  return QZ::of((long long)((__int128)z.j * inv % Nc), Nc);
}

struct NonTorsionData {
  Rat base;
  long level;
  QZ z0;
};

NonTorsionData nt_data(const Point &a, int p) {
  std::map<Int, long> ex;
  factor_into(a.r.get_num(), 1, ex);
  factor_into(a.r.get_den(), -1, ex);
  long g = 0;
  for (const auto &[q, e] : ex)
    g = std::gcd(g, std::labs(e));
  long t = 0;
  while (g % p == 0) {
    g /= p;
    ++t;
  }
  long div = ipow(p, (int)t);
  Rat base = 1;
  for (const auto &[q, e] : ex)
    base *= rat_pow(Rat(q), e / div);
  long h = 0, P = a.P;
  while (P > 1) {
    P /= p;
    ++h;
  }
  long level = t - h;
  long long Nc;
  QZ zc = coprime_part(a.z, p, Nc);
  QZ z0 = zc;
  if (Nc > 1) {
    long long mult = level >= 0 ? mod_pow(mod_inverse(p % Nc, Nc), level, Nc)
                                : mod_pow(p, -level, Nc);
    z0 = zc.times(mult);
  }
  return {base, level, z0};
}

} // namespace

long Tree::cycle_index(const Point &g) const {
  for (size_t i = 0; i < cycle.size(); ++i)
    if (cycle[i] == g)
      return (long)i;
  return -1;
}

Tree tree_of(const Point &a, int p) {
  Tree t;
  t.p = p;
  if (a.is_torsion()) {
    t.torsion = true;
    long long Nc;
    QZ zc = coprime_part(a.z, p, Nc);
    std::vector<QZ> orbit{zc};
    for (QZ z = zc.times(p); !(z == zc); z = z.times(p))
      orbit.push_back(z);
    size_t best = 0;
    for (size_t i = 1; i < orbit.size(); ++i)
      if (orbit[i] < orbit[best])
        best = i;
    for (size_t i = 0; i < orbit.size(); ++i)
      t.cycle.push_back(Point::make(orbit[(best + i) % orbit.size()], 1, 1));
    t.anchor = t.cycle.front();
  } else {
    auto d = nt_data(a, p);
    t.anchor = Point::make(d.z0, d.base, 1);
  }
  t.key = "tau(" + t.anchor.str() + ")";
  return t;
}

bool same_tree(const Point &a, const Point &b, int p) {
  return tree_of(a, p).key == tree_of(b, p).key;
}

bool in_tree(const Point &a, const Tree &t) { return tree_of(a, t.p).key == t.key; }

int torsion_height(const Point &a, int p) {
  if (!a.is_torsion())
    throw NotTorsion(a.str() + " is not a root of unity");
  long long N = a.z.N;
  int h = 0;
  while (N % p == 0) {
    N /= p;
    ++h;
  }
  return h;
}

long tree_level(const Point &a, int p) {
  if (a.is_torsion())
    throw WrongKind("level is defined for non-torsion points only");
  return nt_data(a, p).level;
}

Support supp(const PFD &f, int p) {
  Support s;
  s.infinity = !f.laurent.empty();
  std::map<std::string, Tree> trees;
  for (const auto &[a, tab] : f.poles) {
    Tree t = tree_of(a, p);
    trees.emplace(t.key, t);
  }
  for (auto &[k, t] : trees)
    s.trees.push_back(t);
  return s;
}

std::vector<Point> sing(const PFD &f, const Tree &t) {
  std::vector<Point> out;
  for (const auto &[a, tab] : f.poles)
    if (in_tree(a, t))
      out.push_back(a);
  return out;
}

int ord_at(const PFD &f, const Tree &t) {
  int m = 0;
  for (const auto &a : sing(f, t))
    m = std::max(m, f.order_at(a));
  return m;
}

PFD tau_component(const PFD &f, const Tree &t) {
  PFD out;
  for (const auto &[a, tab] : f.poles)
    if (in_tree(a, t))
      out.poles.emplace(a, tab);
  return out;
}

Disp disp(const PFD &f, const Tree &t) {
  auto pts = sing(f, t);
  if (pts.empty())
    throw NotInSupport(t.key + " is not in the support");
  std::set<Point> have(pts.begin(), pts.end());
  Disp d;
  if (t.torsion) {
    for (const auto &a : pts) {
      int h = torsion_height(a, t.p);
      if (h == 0) {
        d.infinite = true;
        return d;
      }
      for (int n = 1; n <= h; ++n)
        if (have.count(point_power_p(a, t.p, n)))
          d.value = std::max<long>(d.value, n);
    }
    return d;
  }
  for (const auto &a : pts)
    for (const auto &b : pts) {
      long n = tree_level(b, t.p) - tree_level(a, t.p);
      if (n > d.value && point_power_p(a, t.p, (int)n) == b)
        d.value = n;
    }
  return d;
}

Disp disp_infinity(const PFD &f, int p) {
  if (f.laurent.empty())
    throw NotInSupport("infinity is not in the support");
  Disp d;
  long maxabs = 0;
  for (const auto &[e, c] : f.laurent)
    maxabs = std::max(maxabs, std::labs(e));
  for (const auto &[e, c] : f.laurent) {
    if (e == 0)
      continue;
    long n = 0;
    for (long ee = e * p; std::labs(ee) <= maxabs; ee *= p) {
      ++n;
      if (f.laurent.count(ee))
        d.value = std::max(d.value, n);
    }
  }
  return d;
}

Bouquet bouquet_of_points(const std::vector<Point> &pts, int p) {
  if (pts.empty())
    throw NotInSupport("empty point set");
  std::map<Point, long> level;
  long top = LONG_MIN, bottom = LONG_MAX;
  for (const auto &a : pts) {
    long l = tree_level(a, p);
    level[a] = l;
    top = std::max(top, l);
    bottom = std::min(bottom, l);
  }
  std::set<Point> raised;
  for (const auto &[a, l] : level)
    raised.insert(point_power_p(a, p, (int)(top - l)));
  while (raised.size() > 1) {
    std::set<Point> next;
    for (const auto &a : raised)
      next.insert(point_power_p(a, p, 1));
    raised = std::move(next);
    ++top;
  }
  Bouquet b;
  b.root = *raised.begin();
  b.height = (int)(top - bottom);
  for (const auto &[a, l] : level)
    b.eta[a] = (int)(top - l);
  return b;
}

Bouquet bouquet_of(const PFD &f, const Tree &t) {
  if (t.torsion)
    throw WrongKind("bouquets are defined for non-torsion trees");
  auto pts = sing(f, t);
  if (pts.empty())
    throw NotInSupport(t.key + " is not in the support");
  return bouquet_of_points(pts, t.p);
}

std::vector<Point> top_slice(const Tree &t, const Point &root, int h) {
  if (!t.torsion)
    return point_roots_iterated(root, t.p, h);
  std::vector<Point> out;
  for (const auto &g : t.cycle)
    for (const auto &a : point_roots_iterated(g, t.p, h))
      if (torsion_height(a, t.p) == h)
        out.push_back(a);
  return out;
}

} // namespace mahler
