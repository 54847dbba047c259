#include "mahler/cyclemap.hpp"

#include "mahler/mahlercoeff.hpp"

namespace mahler {

namespace {

void require_torsion(const Tree &t) {
  if (!t.torsion)
    throw WrongKind(t.key + " is not a torsion tree");
}

// gamma_i^e for every cycle point, e in [lo, hi]
struct CyclePowers {
  std::vector<std::map<long, AlgConst>> cache;
  const Tree &t;
  explicit CyclePowers(const Tree &tree) : cache(tree.cycle.size()), t(tree) {}
  const AlgConst &get(size_t i, long e) {
    auto it = cache[i].find(e);
    if (it != cache[i].end())
      return it->second;
    return cache[i].emplace(e, t.cycle[i].pow(e)).first->second;
  }
};

// solves -u_i + q u_{i+1} = beta_i for the degree-k unknowns d_k = gamma^k u,
// with q = p^(lambda-k); the q = 1 case returns the zero-mean-free particular solution
std::vector<AlgConst> solve_degree(const Tree &t, CyclePowers &pw, int lambda, int k,
                                   const std::vector<AlgConst> &b) {
  size_t e = t.cycle.size();
  std::vector<AlgConst> beta(e);
  for (size_t i = 0; i < e; ++i)
    beta[i] = b[i] * pw.get(i, -k);
  std::vector<AlgConst> out(e);
  if (k != lambda) {
    Rat q = p_power(t.p, lambda - k);
    Rat denom = rat_pow(q, (long)e) - 1;
    for (size_t i = 0; i < e; ++i) {
      AlgConst acc;
      Rat qj = 1;
      for (size_t j = 0; j < e; ++j) {
        acc += beta[(i + j) % e].scaled(qj);
        qj *= q;
      }
      out[i] = (acc * pw.get(i, k)).scaled(1 / denom);
    }
  } else {
    for (size_t i = 0; i < e; ++i) {
      AlgConst acc;
      for (size_t j = 0; j < e; ++j)
        acc += beta[(i + j) % e].scaled(Rat((long)j + 1 - (long)e));
      out[i] = (acc * pw.get(i, k)).scaled(Rat(1, (long)e));
    }
  }
  return out;
}

// p^lambda sum_{s>k} V^s_{k,1}(gamma_i) d_s(gamma_{i+1})
AlgConst upper_sum(const Tree &t, CyclePowers &pw, int lambda, int k, size_t i,
                   const CycVec &d) {
  size_t e = t.cycle.size();
  AlgConst acc;
  for (int s = k + 1; s <= d.max_degree; ++s) {
    const AlgConst &ds = d.v[s - 1][(i + 1) % e];
    if (ds.is_zero())
      continue;
    acc += (pw.get(i, k - (long)s * t.p) * ds).scaled(vcoeff(s, k, 1, t.p));
  }
  return acc.scaled(p_power(t.p, lambda));
}

} // namespace

CycVec CycVec::zero(int m, size_t e) {
  CycVec out;
  out.max_degree = m;
  out.length = e;
  out.v.assign(m, std::vector<AlgConst>(e));
  return out;
}

AlgConst CycVec::at(int k, size_t i) const {
  if (k < 1 || k > max_degree)
    return AlgConst();
  return v[k - 1][i];
}

void CycVec::set(int k, size_t i, const AlgConst &c) { v.at(k - 1).at(i) = c; }

bool CycVec::is_zero() const { return top_degree() == 0; }

int CycVec::top_degree() const {
  for (int k = max_degree; k >= 1; --k)
    for (const auto &c : v[k - 1])
      if (!c.is_zero())
        return k;
  return 0;
}

CycVec CycVec::padded(int m) const {
  if (m <= max_degree)
    return *this;
  CycVec out = *this;
  out.max_degree = m;
  out.v.resize(m, std::vector<AlgConst>(cycle_length()));
  return out;
}

CycVec operator+(const CycVec &a, const CycVec &b) {
  size_t e = std::max(a.cycle_length(), b.cycle_length());
  CycVec out = CycVec::zero(std::max(a.max_degree, b.max_degree), e);
  for (int k = 1; k <= out.max_degree; ++k)
    for (size_t i = 0; i < e; ++i) {
      AlgConst s;
      if (k <= a.max_degree)
        s += a.v[k - 1][i];
      if (k <= b.max_degree)
        s += b.v[k - 1][i];
      out.v[k - 1][i] = s;
    }
  return out;
}

CycVec operator-(const CycVec &a, const CycVec &b) { return a + b.scaled(AlgConst(-1)); }

CycVec CycVec::scaled(const AlgConst &c) const {
  CycVec out = *this;
  for (auto &row : out.v)
    for (auto &x : row)
      x = x * c;
  return out;
}

bool operator==(const CycVec &a, const CycVec &b) { return (a - b).is_zero(); }

CycVec cyclic_component(const PFD &f, const Tree &t) {
  require_torsion(t);
  int m = 0;
  for (const auto &g : t.cycle)
    m = std::max(m, f.order_at(g));
  CycVec out = CycVec::zero(m, t.cycle.size());
  for (size_t i = 0; i < t.cycle.size(); ++i) {
    auto it = f.poles.find(t.cycle[i]);
    if (it == f.poles.end())
      continue;
    for (const auto &[k, c] : it->second)
      out.set(k, i, c);
  }
  return out;
}

PFD cycvec_to_pfd(const CycVec &v, const Tree &t) {
  PFD out;
  for (int k = 1; k <= v.max_degree; ++k)
    for (size_t i = 0; i < t.cycle.size(); ++i)
      out.add_pole(t.cycle[i], k, v.v[k - 1][i]);
  return out;
}

CycVec d_apply(const CycVec &d, const Tree &t, int lambda) {
  require_torsion(t);
  size_t e = t.cycle.size();
  CyclePowers pw(t);
  CycVec out = CycVec::zero(d.max_degree, e);
  for (int k = 1; k <= d.max_degree; ++k)
    for (size_t i = 0; i < e; ++i) {
      AlgConst own = (pw.get(i, k - (long)k * t.p) * d.v[k - 1][(i + 1) % e])
                         .scaled(vcoeff(k, k, 1, t.p) * p_power(t.p, lambda));
      out.v[k - 1][i] = own - d.v[k - 1][i] + upper_sum(t, pw, lambda, k, i, d);
    }
  return out;
}

CycVec kernel_vector(const Tree &t, int lambda) {
  require_torsion(t);
  if (lambda <= 0)
    throw BadTwist("the cycle map is injective for lambda <= 0");
  size_t e = t.cycle.size();
  CyclePowers pw(t);
  CycVec w = CycVec::zero(lambda, e);
  for (size_t i = 0; i < e; ++i)
    w.set(lambda, i, pw.get(i, lambda));
  for (int k = lambda - 1; k >= 1; --k) {
    std::vector<AlgConst> b(e);
    for (size_t i = 0; i < e; ++i)
      b[i] = -upper_sum(t, pw, lambda, k, i, w);
    auto row = solve_degree(t, pw, lambda, k, b);
    for (size_t i = 0; i < e; ++i)
      w.set(k, i, row[i]);
  }
  return w;
}

CycVec section(const CycVec &c, const Tree &t, int lambda, const AlgConst &omega) {
  require_torsion(t);
  size_t e = t.cycle.size();
  CyclePowers pw(t);
  int m = c.top_degree();
  CycVec d = CycVec::zero(m, e);
  for (int k = m; k >= 1; --k) {
    std::vector<AlgConst> b(e);
    for (size_t i = 0; i < e; ++i)
      b[i] = c.at(k, i) - upper_sum(t, pw, lambda, k, i, d);
    auto row = solve_degree(t, pw, lambda, k, b);
    for (size_t i = 0; i < e; ++i)
      d.set(k, i, row[i]);
  }
  if (lambda >= 1 && !omega.is_zero())
    d = d + kernel_vector(t, lambda).scaled(omega);
  return d;
}

int torsion_tree_height(const PFD &f, const Tree &t) {
  require_torsion(t);
  int h = -1;
  for (const auto &a : sing(f, t))
    h = std::max(h, torsion_height(a, t.p));
  if (h < 0)
    throw NotInSupport(t.key + " is not in the support");
  return h;
}

AlgConst residual_average(const PFD &f, const Tree &t, int lambda, std::optional<int> height) {
  require_torsion(t);
  int H = torsion_tree_height(f, t);
  if (height) {
    if (*height < H)
      throw Error("height override below the natural height");
    H = *height;
  }
  if (lambda <= 0 || H == 0)
    return AlgConst();
  int p = t.p;
  size_t e = t.cycle.size();
  CycVec c = cyclic_component(f, t);
  CycVec d0 = section(c, t, lambda, AlgConst());
  CycVec ct = d_apply(d0.padded(c.max_degree), t, lambda);
  // first sum: average over the top slice
  AlgConst first;
  auto slice = top_slice(t, t.anchor, H);
  for (const auto &a : slice) {
    AlgConst av = a.value();
    for (int n = 0; n < H; ++n) {
      Point an = point_power_p(a, p, n);
      auto it = f.poles.find(an);
      if (it == f.poles.end())
        continue;
      long pn = ipow(p, n);
      for (const auto &[s, cs] : it->second) {
        if (s < lambda)
          continue;
        first += (a.pow(-(long)s * pn) * cs)
                     .scaled(vcoeff(s, lambda, n, p) * p_power(p, (long)lambda * n));
      }
    }
  }
  long count = (long)slice.size();
  first = first.scaled(Rat(1, count));
  AlgConst second;
  int mt = std::max(ct.max_degree, d0.max_degree);
  for (size_t i = 0; i < e; ++i)
    for (int s = lambda; s <= mt; ++s) {
      AlgConst v = ct.at(s, i) + d0.at(s, i);
      if (v.is_zero())
        continue;
      second += (t.cycle[i].pow(-s) * v).scaled(vcoeff(s, lambda, H - 1, p));
    }
  second = second.scaled(p_power(p, (long)lambda * (H - 1)) / Rat((long)e));
  return first - second;
}

} // namespace mahler
