#include "mahler/residues.hpp"

#include <algorithm>

#include "mahler/mahlercoeff.hpp"

namespace mahler {

namespace {

// sum_{j<n} p^(lambda j) sigma^j(g)
PFD unfolded(const PFD &g, int p, int lambda, int n) {
  PFD out, cur = g;
  for (int j = 0; j < n; ++j) {
    if (j > 0)
      cur = sigma(cur, p, 1);
    out += cur.scaled(AlgConst(p_power(p, (long)lambda * j)));
  }
  return out;
}

// partial-fraction part of f at poles a with a^(p^n) = root: sum over the layer
// of sum_s p^(lambda n) V^s_{k,n}(a) c_s(a^(p^n)) accumulated into acc[(k, a)]
void push_up(const PFD &f, const Point &a, int n, int p, int lambda, int kmin,
             std::map<int, AlgConst> &acc) {
  Point b = point_power_p(a, p, n);
  auto it = f.poles.find(b);
  if (it == f.poles.end())
    return;
  long pn = ipow(p, n);
  Rat scale = p_power(p, (long)lambda * n);
  std::map<int, AlgConst> apow;
  for (const auto &[s, cs] : it->second) {
    AlgConst base = a.pow(-(long)s * pn) * cs;
    for (int k = std::max(1, kmin); k <= s; ++k) {
      auto pt = apow.find(k);
      if (pt == apow.end())
        pt = apow.emplace(k, a.pow(k)).first;
      acc[k] += (base * pt->second).scaled(vcoeff(s, k, n, p) * scale);
    }
  }
}

void finish_entries(TreeResidues &r) {
  std::sort(r.entries.begin(), r.entries.end(), [](const ResidueEntry &x, const ResidueEntry &y) {
    return x.degree != y.degree ? x.degree < y.degree : x.point < y.point;
  });
}

TreeResidues nontorsion_local(const PFD &f, const Tree &t, int lambda,
                              std::optional<HeightOverride> ov, PFD *G) {
  if (t.torsion)
    throw WrongKind(t.key + " is a torsion tree");
  int p = t.p;
  PFD ft = tau_component(f, t);
  if (ft.is_zero())
    throw NotInSupport(t.key + " is not in the support");
  Bouquet b = bouquet_of(ft, t);
  Point root = b.root;
  int H = b.height;
  if (ov) {
    if (ov->root) {
      root = *ov->root;
      H = ov->height;
    } else {
      if (ov->height < H)
        throw Error("height override below the natural height");
      root = point_power_p(root, p, ov->height - H);
      H = ov->height;
    }
    for (auto &[a, eta] : b.eta) {
      long n = tree_level(root, p) - tree_level(a, p);
      if (n < 0 || n > H || !(point_power_p(a, p, (int)n) == root))
        throw Error("override bouquet does not contain " + a.str());
      eta = (int)n;
    }
  }
  TreeResidues out;
  out.tree = t;
  out.height = H;
  out.root = root;
  for (const auto &a : top_slice(t, root, H)) {
    std::map<int, AlgConst> acc;
    for (int n = 0; n <= H; ++n)
      push_up(ft, a, n, p, lambda, 1, acc);
    for (const auto &[k, v] : acc)
      if (!v.is_zero())
        out.entries.push_back({k, a, v});
  }
  finish_entries(out);
  if (G) {
    std::vector<PFD> layer(H + 1);
    for (const auto &[a, tab] : ft.poles)
      layer[b.eta.at(a)].poles.emplace(a, tab);
    for (int n = 1; n <= H; ++n)
      if (!layer[H - n].is_zero())
        *G += unfolded(layer[H - n], p, lambda, n);
  }
  return out;
}

TreeResidues torsion_local(const PFD &f, const Tree &t, int lambda, std::optional<int> height,
                           PFD *G) {
  if (!t.torsion)
    throw WrongKind(t.key + " is not a torsion tree");
  int p = t.p;
  PFD ft = tau_component(f, t);
  if (ft.is_zero())
    throw NotInSupport(t.key + " is not in the support");
  int H = torsion_tree_height(ft, t);
  if (height) {
    if (*height < H)
      throw Error("height override below the natural height");
    H = *height;
  }
  TreeResidues out;
  out.tree = t;
  out.height = H;
  out.root = t.anchor;
  CycVec c = cyclic_component(ft, t);
  size_t e = t.cycle.size();
  if (H == 0) {
    for (int k = 1; k <= c.max_degree; ++k)
      for (size_t i = 0; i < e; ++i)
        if (!c.at(k, i).is_zero())
          out.entries.push_back({k, t.cycle[i], c.at(k, i)});
    finish_entries(out);
    return out;
  }
  out.omega = residual_average(ft, t, lambda, H);
  CycVec d = section(c, t, lambda, out.omega);
  int m = std::max(c.max_degree, d.max_degree);
  CycVec ct = d_apply(d.padded(m), t, lambda);
  out.section = d;
  out.image = ct;
  CycVec sum = ct + d;
  long cyc_exp = ipow(p, H + (int)e - 1);
  Rat scale = p_power(p, (long)lambda * (H - 1));
  for (const auto &a : top_slice(t, t.anchor, H)) {
    std::map<int, AlgConst> acc;
    for (int n = 0; n < H; ++n)
      push_up(ft, a, n, p, lambda, 1, acc);
    Point g = point_power_p(a, p, H + (int)e - 1);
    size_t gi = (size_t)t.cycle_index(g);
    for (int s = 1; s <= sum.max_degree; ++s) {
      AlgConst v = sum.at(s, gi);
      if (v.is_zero())
        continue;
      AlgConst base = a.pow(-(long)s * cyc_exp) * v;
      for (int k = 1; k <= s; ++k)
        acc[k] -= (base * a.pow(k)).scaled(vcoeff(s, k, H - 1, p) * scale);
    }
    for (const auto &[k, v] : acc)
      if (!v.is_zero())
        out.entries.push_back({k, a, v});
  }
  if (lambda >= 1)
    for (size_t i = 0; i < e; ++i) {
      AlgConst v = c.at(lambda, i) - ct.at(lambda, i);
      if (!v.is_zero())
        out.entries.push_back({lambda, t.cycle[i], v});
    }
  finish_entries(out);
  if (G) {
    std::vector<PFD> layer(H + 1);
    for (const auto &[a, tab] : ft.poles)
      layer[torsion_height(a, p)].poles.emplace(a, tab);
    for (int n = 1; n <= H - 1; ++n)
      if (!layer[H - n].is_zero())
        *G += unfolded(layer[H - n], p, lambda, n);
    *G -= cycvec_to_pfd(d, t);
    PFD g1;
    for (size_t i = 0; i < e; ++i) {
      const Point &gam = t.cycle[i];
      for (const auto &beta : point_pth_roots(point_power_p(gam, p, 1), p)) {
        if (beta == gam)
          continue;
        for (int k = 1; k <= sum.max_degree; ++k) {
          AlgConst v = sum.at(k, i);
          if (!v.is_zero())
            g1.add_pole(beta, k, -(beta.pow(k) * gam.pow(-k) * v));
        }
      }
    }
    if (H >= 2)
      *G += unfolded(g1, p, lambda, H - 1);
  }
  return out;
}

std::vector<InfinityEntry> infinity_local(const PFD &f, int p, int lambda, PFD *G) {
  std::map<long, std::vector<std::pair<long, AlgConst>>> traj;
  for (const auto &[e, c] : f.laurent)
    traj[trajectory_of(e, p)].push_back({e, c});
  std::vector<InfinityEntry> out;
  for (const auto &[i, terms] : traj) {
    if (i == 0) {
      const AlgConst &c0 = terms.front().second;
      if (lambda == 0)
        out.push_back({0, 0, c0});
      else if (G)
        G->add_laurent(0, c0.scaled(-1 / (p_power(p, lambda) - 1)));
      continue;
    }
    std::map<int, AlgConst> byj;
    for (const auto &[e, c] : terms) {
      int j = 0;
      for (long ee = e; ee != i; ee /= p)
        ++j;
      byj[j] = c;
    }
    int h = byj.rbegin()->first;
    AlgConst value;
    for (const auto &[j, c] : byj)
      value += c.scaled(p_power(p, (long)lambda * (h - j)));
    if (!value.is_zero())
      out.push_back({i, h, value});
    if (G)
      for (const auto &[j, c] : byj) {
        long e = i * ipow(p, j);
        for (int l = 0; l < h - j; ++l) {
          G->add_laurent(e, c.scaled(p_power(p, (long)lambda * l)));
          e *= p;
        }
      }
  }
  return out;
}

PFD residual_of(const std::vector<InfinityEntry> &inf, const std::vector<TreeResidues> &trees,
                int p) {
  PFD out;
  for (const auto &en : inf)
    out.add_laurent(en.traj * ipow(p, en.height), en.value);
  for (const auto &tr : trees)
    for (const auto &en : tr.entries)
      out.add_pole(en.point, en.degree, en.value);
  return out;
}

} // namespace

AlgConst TreeResidues::value(int k, const Point &a) const {
  for (const auto &en : entries)
    if (en.degree == k && en.point == a)
      return en.value;
  return AlgConst();
}

std::vector<InfinityEntry> dres_infinity(const PFD &f, int p, int lambda) {
  return infinity_local(f, p, lambda, nullptr);
}

TreeResidues dres_nontorsion(const PFD &f, const Tree &t, int lambda,
                             std::optional<HeightOverride> ov) {
  return nontorsion_local(f, t, lambda, ov, nullptr);
}

TreeResidues dres_torsion(const PFD &f, const Tree &t, int lambda, std::optional<int> height) {
  return torsion_local(f, t, lambda, height, nullptr);
}

TreeResidues dres_tree(const PFD &f, const Tree &t, int lambda) {
  return t.torsion ? dres_torsion(f, t, lambda) : dres_nontorsion(f, t, lambda);
}

Reduction reduce(const PFD &f, int p, int lambda) {
  Reduction r;
  r.p = p;
  r.lambda = lambda;
  r.infinity = infinity_local(f, p, lambda, &r.certificate_part);
  for (const auto &t : supp(f, p).trees)
    r.trees.push_back(t.torsion ? torsion_local(f, t, lambda, std::nullopt, &r.certificate_part)
                                : nontorsion_local(f, t, lambda, std::nullopt,
                                                   &r.certificate_part));
  r.residual = residual_of(r.infinity, r.trees, p);
  return r;
}

bool is_summable(const PFD &f, int p, int lambda) { return reduce(f, p, lambda).residual.is_zero(); }

std::optional<PFD> certificate_from(const Reduction &r, const PFD &f) {
  if (!r.residual.is_zero())
    return std::nullopt;
  PFD g = -r.certificate_part;
  if (!(delta_lambda(g, r.p, r.lambda) == f))
    throw InternalVerificationFailure("certificate does not reproduce the input");
  return g;
}

std::optional<PFD> certificate(const PFD &f, int p, int lambda) {
  return certificate_from(reduce(f, p, lambda), f);
}

} // namespace mahler
