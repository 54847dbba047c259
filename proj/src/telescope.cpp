#include "mahler/telescope.hpp"

#include <algorithm>
#include <map>

namespace mahler {

namespace {

using RowKey = std::pair<std::string, Point>;

std::vector<TreeResidues> common_residues(const std::vector<PFD> &fs, const Tree &t, int lambda) {
  std::vector<TreeResidues> out(fs.size());
  if (t.torsion) {
    int H = 0;
    for (const auto &f : fs)
      if (!sing(f, t).empty())
        H = std::max(H, torsion_tree_height(f, t));
    for (size_t i = 0; i < fs.size(); ++i)
      if (!sing(fs[i], t).empty())
        out[i] = dres_torsion(fs[i], t, lambda, H);
    return out;
  }
  std::vector<Point> pts;
  for (const auto &f : fs)
    for (const auto &a : sing(f, t))
      pts.push_back(a);
  Bouquet b = bouquet_of_points(pts, t.p);
  HeightOverride ov{b.height, b.root};
  for (size_t i = 0; i < fs.size(); ++i)
    if (!sing(fs[i], t).empty())
      out[i] = dres_nontorsion(fs[i], t, lambda, ov);
  return out;
}

std::vector<Tree> union_trees(const std::vector<PFD> &fs, int p) {
  std::map<std::string, Tree> trees;
  for (const auto &f : fs)
    for (const auto &t : supp(f, p).trees)
      trees.emplace(t.key, t);
  std::vector<Tree> out;
  for (auto &[k, t] : trees)
    out.push_back(t);
  return out;
}

std::vector<Int> integer_scaled(const std::vector<Rat> &v) {
  Int l = 1, g = 0;
  for (const auto &q : v)
    if (q != 0)
      l = lcm(l, Int(q.get_den()));
  std::vector<Int> out;
  for (const auto &q : v) {
    Rat s = q * l;
    out.push_back(s.get_num());
    g = gcd(g, Int(s.get_num()));
  }
  if (g == 0)
    return out;
  bool flip = false;
  for (const auto &x : out)
    if (x != 0) {
      flip = x < 0;
      break;
    }
  for (auto &x : out) {
    x /= g;
    if (flip)
      x = -x;
  }
  return out;
}

} // namespace

PFD log_derivative(const RatFun &a, int p) {
  if (a.is_zero())
    throw ZeroDivision("log derivative of zero");
  return pf_decompose(partial_derivation(a) / a, p);
}

ResidueMatrix logderiv_residues(const std::vector<RatFun> &a, int p) {
  std::vector<PFD> fs;
  for (const auto &ai : a)
    fs.push_back(log_derivative(ai, p));
  ResidueMatrix m;
  m.cols = a.size();
  std::map<RowKey, std::vector<Rat>> rows;
  for (const auto &t : union_trees(fs, p)) {
    auto res = common_residues(fs, t, 1);
    for (size_t i = 0; i < fs.size(); ++i)
      for (const auto &en : res[i].entries) {
        if (en.degree != 1)
          throw NonRationalResidue("unexpected degree " + std::to_string(en.degree) +
                                   " residue at " + en.point.str());
        AlgConst q = en.value * en.point.pow(-1);
        if (!q.is_rational())
          throw NonRationalResidue("residue " + en.value.str() + " at " + en.point.str() +
                                   " is not a rational multiple of the point");
        auto &row = rows[{t.key, en.point}];
        row.resize(fs.size());
        row[i] = q.to_rat();
      }
  }
  for (auto &[k, v] : rows) {
    m.rows.push_back({k.first, k.second});
    m.entries.push_back(std::move(v));
  }
  return m;
}

std::vector<std::vector<Int>> rational_kernel(const ResidueMatrix &m) {
  std::vector<std::vector<Int>> out;
  for (const auto &v : nullspace(m.entries, m.cols))
    out.push_back(integer_scaled(v));
  return out;
}

DependenceVerdict decide_dependence(const std::vector<RatFun> &a, int p) {
  DependenceVerdict out;
  ResidueMatrix m = logderiv_residues(a, p);
  std::vector<PFD> fs;
  for (const auto &ai : a)
    fs.push_back(log_derivative(ai, p));
  for (const auto &k : rational_kernel(m)) {
    PFD F;
    for (size_t i = 0; i < fs.size(); ++i)
      if (k[i] != 0)
        F += fs[i].scaled(AlgConst(Rat(k[i])));
    auto g = certificate(F, p, 1);
    if (!g)
      continue;
    RatFun gr = reconstruct(*g);
    RatFun lhs;
    for (size_t i = 0; i < a.size(); ++i)
      if (k[i] != 0)
        lhs = lhs + (partial_derivation(a[i]) / a[i]).scaled(AlgConst(Rat(k[i])));
    if (!(lhs == delta_lambda(gr, p, 1)))
      throw InternalVerificationFailure("dependence witness does not verify");
    out.dependent = true;
    out.coefficients = k;
    out.witness = gr;
    return out;
  }
  return out;
}

bool nishioka_identity_check(const RatFun &a, int lambda, const Tree &t) {
  if (lambda < 1)
    throw BadTwist("the identity is stated for lambda >= 1");
  int p = t.p;
  PFD f1 = log_derivative(a, p);
  PFD fl = f1;
  for (int i = 1; i < lambda; ++i)
    fl = partial_derivation(fl);
  if (sing(f1, t).empty())
    return true;
  TreeResidues r1 = dres_tree(f1, t, 1);
  TreeResidues rl = dres_tree(fl, t, lambda);
  Rat fact = 1;
  for (int i = 2; i < lambda; ++i)
    fact *= i;
  if ((lambda - 1) % 2 == 1)
    fact = -fact;
  std::vector<Point> pts;
  for (const auto &en : r1.entries)
    pts.push_back(en.point);
  for (const auto &en : rl.entries)
    pts.push_back(en.point);
  for (const auto &al : pts) {
    AlgConst rhs = (al.pow(lambda - 1) * r1.value(1, al)).scaled(fact);
    if (!(rl.value(lambda, al) == rhs))
      return false;
  }
  return true;
}

} // namespace mahler
