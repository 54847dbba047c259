#pragma once

#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "mahler/parse.hpp"
#include "mahler/linalg.hpp"
#include "mahler/residues.hpp"

namespace testing_support {

using namespace mahler;
using Cx = std::complex<double>;

inline Cx unit_root(long long j, long long N) {
  double t = 2.0 * M_PI * (double)j / (double)N;
  return {std::cos(t), std::sin(t)};
}

inline Cx numeric(const Cyc &c) {
  Cx out = 0;
  for (size_t j = 0; j < c.coeffs().size(); ++j)
    out += c.coeffs()[j].get_d() * unit_root((long long)j, c.conductor());
  return out;
}

inline Cx numeric(const AlgConst &a) {
  double rho = std::pow(a.radicand().get_d(), 1.0 / (double)a.radical_index());
  Cx out = 0;
  for (size_t t = 0; t < a.terms().size(); ++t)
    out += numeric(a.terms()[t]) * std::pow(rho, (double)t);
  return out;
}

inline Cx numeric(const Point &a) {
  return unit_root(a.z.j, a.z.N) * std::pow(a.r.get_d(), 1.0 / (double)a.P);
}

inline Cx eval(const Poly &f, Cx x) {
  Cx out = 0;
  for (long i = f.degree(); i >= 0; --i)
    out = out * x + numeric(f.coeffs()[i]);
  return out;
}

inline Cx eval(const RatFun &f, Cx x) { return eval(f.num(), x) / eval(f.den(), x); }

inline Cx eval(const PFD &f, Cx x) {
  Cx out = 0;
  for (const auto &[e, c] : f.laurent)
    out += numeric(c) * std::pow(x, (double)e);
  for (const auto &[a, tab] : f.poles)
    for (const auto &[k, c] : tab)
      out += numeric(c) / std::pow(x - numeric(a), (double)k);
  return out;
}

inline bool close(Cx a, Cx b, double tol = 1e-8) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

inline PFD pfd(const std::string &s, int p) { return pf_decompose(parse_expr(s, p), p); }

// deterministic generator of rational functions over a fixed pole universe
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(uint64_t seed) : rng(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  bool coin(int num = 1, int den = 2) { return uniform(1, den) <= num; }

  Rat small_rat() {
    long n = 0;
    while (n == 0)
      n = uniform(-3, 3);
    return Rat(n, uniform(1, 3));
  }

  static std::vector<Point> anchors() {
    return {Point::rational(2), Point::rational(Rat(3, 2)), Point::one(),
            Point::root_of_unity(1, 3), Point::root_of_unity(1, 4), Point::root_of_unity(1, 5)};
  }

  template <class T> const T &pick(const std::vector<T> &v) {
    return v[(size_t)uniform(0, (long)v.size() - 1)];
  }

  // point of the tree of the anchor within p-power height 2 of its cycle or base
  Point point_near(const Point &anchor, int p) {
    Point base = anchor;
    if (anchor.is_torsion())
      base = pick(tree_of(anchor, p).cycle);
    int h = (int)uniform(0, 2);
    return pick(point_roots_iterated(base, p, h));
  }

  AlgConst coefficient(const Point &a) {
    AlgConst c(small_rat());
    if (coin(1, 4))
      c = c * a.value();
    return c;
  }

  PFD random_pfd(int p, int max_order = 4, bool laurent = true) {
    PFD g;
    auto all = anchors();
    std::shuffle(all.begin(), all.end(), rng);
    int trees = (int)uniform(1, 2);
    for (int t = 0; t < trees; ++t) {
      int poles = (int)uniform(1, 3);
      for (int i = 0; i < poles; ++i) {
        Point a = point_near(all[t], p);
        int ord = (int)uniform(1, max_order);
        for (int k = 1; k <= ord; ++k)
          if (k == ord || coin())
            g.add_pole(a, k, coefficient(a));
      }
    }
    if (laurent && coin())
      for (int i = (int)uniform(1, 2); i > 0; --i)
        g.add_laurent(uniform(-3, 3), AlgConst(small_rat()));
    return g;
  }
};

} // namespace testing_support

namespace testing_support {

// rational coordinates of a radical-free constant in the power basis of Q(zeta_M)
inline std::vector<Rat> coordinates(const AlgConst &a, long M) {
  return a.embed(M, Rat(1), 1).terms()[0].coeffs();
}

// Q-dimension of the kernel of the cycle map on vectors of degree <= m over Q(zeta_M)
inline size_t cycle_map_kernel_dim(const Tree &t, int lambda, int m) {
  long M = 1;
  for (const auto &g : t.cycle)
    M = std::lcm(M, (long)g.z.N);
  size_t e = t.cycle.size(), phi = (size_t)euler_phi(M);
  std::vector<CycVec> images;
  long L = M;
  for (int k = 1; k <= m; ++k)
    for (size_t i = 0; i < e; ++i)
      for (size_t j = 0; j < phi; ++j) {
        CycVec v = CycVec::zero(m, e);
        v.set(k, i, AlgConst::zeta(M, (long long)j));
        images.push_back(d_apply(v, t, lambda));
        for (const auto &row : images.back().v)
          for (const auto &x : row)
            L = std::lcm(L, x.conductor());
      }
  size_t rows = (size_t)m * e * (size_t)euler_phi(L);
  RatMatrix A(rows, std::vector<Rat>(images.size()));
  for (size_t col = 0; col < images.size(); ++col) {
    size_t r = 0;
    for (const auto &row : images[col].v)
      for (const auto &x : row)
        for (const auto &q : coordinates(x, L))
          A[r++][col] = q;
  }
  return nullspace(A, images.size()).size();
}

} // namespace testing_support
