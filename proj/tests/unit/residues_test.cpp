#include <doctest.h>

#include "../common/support.hpp"

using namespace testing_support;

namespace {

const char *summable1 = "(-x^6+4*x^3+3*x^2-12*x+8)/((x-2)^2*(x^3-2)^2)";
const char *nonsummable1 = "(-2*x^4+2*x^2+1)/((x^2+1)*(x^4-x^2+1))";
const char *summable_m1 = "(-3*x^6+30*x^3+x^2-10*x-50)/(3*(x-5)^2*(x^3-5)^2)";
const char *nonsummable_m1 = "1/(2*(x^4+x^2+1))";

AlgConst infinity_value(const std::vector<InfinityEntry> &es, long traj) {
  for (const auto &e : es)
    if (e.traj == traj)
      return e.value;
  return AlgConst();
}

bool all_zero(const Reduction &r) {
  if (!r.infinity.empty())
    return false;
  for (const auto &t : r.trees)
    if (!t.is_zero())
      return false;
  return true;
}

} // namespace

TEST_CASE("residues at infinity") {
  CHECK(infinity_value(dres_infinity(pfd("x+x^3", 3), 3, 1), 1) == AlgConst(4));
  CHECK(dres_infinity(delta_lambda(pfd("x", 2), 2, 1), 2, 1).empty());
  CHECK(infinity_value(dres_infinity(pfd("7", 5), 5, 0), 0) == AlgConst(7));
  CHECK(dres_infinity(pfd("7", 5), 5, 2).empty());
  CHECK(infinity_value(dres_infinity(pfd("x^-1", 2), 2, -1), -1) == AlgConst(1));
}

TEST_CASE("non-torsion residues") {
  Tree t2 = tree_of(Point::rational(2), 3);
  CHECK(dres_nontorsion(pfd(summable1, 3), t2, 1).is_zero());
  for (int lambda : {-1, 0, 2}) {
    TreeResidues r = dres_nontorsion(pfd("1/(x-2)", 3), t2, lambda);
    CHECK(r.value(1, Point::rational(2)) == AlgConst(1));
    CHECK(r.entries.size() == 1);
  }
  CHECK(dres_nontorsion(pfd(summable_m1, 3), tree_of(Point::rational(5), 3), -1).is_zero());
  CHECK_THROWS_AS(dres_nontorsion(pfd("1/(x-1)", 2), tree_of(Point::one(), 2), 1), WrongKind);

  // 1/(x-4) + c/(x-2) at p = 2: the pole at 4 is pulled down to 2 through sigma
  TreeResidues r = dres_nontorsion(pfd("1/(x-4)+3/(x-2)", 2), tree_of(Point::rational(2), 2), 1);
  CHECK(r.root == Point::rational(4));
  CHECK(r.height == 1);
  for (const auto &en : r.entries)
    CHECK(en.degree == 1);
}

TEST_CASE("torsion residues") {
  Tree t4 = tree_of(Point::root_of_unity(1, 4), 3);
  TreeResidues r = dres_torsion(pfd(nonsummable1, 3), t4, 1);
  CHECK(r.omega == AlgConst(Rat(-1, 4)));
  CHECK(r.height == 1);
  CHECK(r.value(1, Point::root_of_unity(1, 4)) == AlgConst::zeta(4, 3).scaled(Rat(-1, 2)));
  CHECK(r.value(1, Point::root_of_unity(3, 4)) == AlgConst::zeta(4, 1).scaled(Rat(-1, 2)));
  for (long j : {1, 5, 7, 11})
    CHECK(r.value(1, Point::root_of_unity(j, 12)).is_zero());

  CHECK(dres_torsion(pfd("-1/(x+1)", 2), tree_of(Point::one(), 2), 1).is_zero());

  // height zero: the cycle entries are returned verbatim
  TreeResidues h0 = dres_torsion(pfd("2/(x-zeta(4))^2", 3), t4, 1);
  CHECK(h0.height == 0);
  CHECK(h0.value(2, Point::root_of_unity(1, 4)) == AlgConst(2));

  Tree t3 = tree_of(Point::root_of_unity(1, 3), 2);
  TreeResidues m1 = dres_torsion(pfd(nonsummable_m1, 2), t3, -1);
  CHECK(m1.omega.is_zero());
  CHECK_FALSE(m1.is_zero());
  for (const auto &en : m1.entries)
    CHECK(torsion_height(en.point, 2) == 1);
}

TEST_CASE("reduction of the worked examples") {
  Reduction s1 = reduce(pfd(summable1, 3), 3, 1);
  CHECK(all_zero(s1));
  CHECK(s1.residual.is_zero());
  CHECK(reconstruct(s1.certificate_part) == parse_expr("-1/(x-2)^2", 3));
  CHECK(reduce(PFD(), 2, 1).residual.is_zero());
  CHECK(reduce(PFD(), 2, 1).certificate_part.is_zero());

  Reduction n1 = reduce(pfd(nonsummable1, 3), 3, 1);
  PFD assembled;
  for (const auto &t : n1.trees)
    for (const auto &en : t.entries)
      assembled.add_pole(en.point, en.degree, en.value);
  CHECK(n1.residual == assembled);
  CHECK_FALSE(n1.residual.is_zero());

  CHECK(is_summable(pfd(summable1, 3), 3, 1));
  CHECK_FALSE(is_summable(pfd(nonsummable1, 3), 3, 1));
  CHECK(is_summable(pfd(summable_m1, 3), 3, -1));
  CHECK_FALSE(is_summable(pfd(nonsummable_m1, 2), 2, -1));
}

TEST_CASE("certificates") {
  CHECK(reconstruct(*certificate(pfd(summable1, 3), 3, 1)) == parse_expr("1/(x-2)^2", 3));
  CHECK(reconstruct(*certificate(pfd(summable_m1, 3), 3, -1)) == parse_expr("1/(x-5)^2", 3));
  CHECK(reconstruct(*certificate(pfd("-1/(x+1)", 2), 2, 1)) == parse_expr("1/(x-1)", 2));
  for (int lambda : {-1, 1, 2})
    CHECK(reconstruct(*certificate(pfd("5", 3), 3, lambda)) ==
          RatFun(AlgConst(Rat(5) / (p_power(3, lambda) - 1))));
  CHECK_FALSE(certificate(pfd("5", 3), 3, 0).has_value());
  CHECK_FALSE(certificate(pfd(nonsummable1, 3), 3, 1).has_value());
}

TEST_CASE("property: reduction identity and summability of differences") {
  Gen gen(61);
  for (int trial = 0; trial < 40; ++trial) {
    int p = gen.coin() ? 2 : 3;
    int lambda = (int)gen.uniform(-2, 3);
    PFD g = gen.random_pfd(p, 3);
    PFD f = delta_lambda(g, p, lambda);
    Reduction r = reduce(f, p, lambda);
    CHECK(r.residual == f + delta_lambda(r.certificate_part, p, lambda));
    CHECK(r.residual.is_zero());
    auto c = certificate(f, p, lambda);
    REQUIRE(c.has_value());
    CHECK(delta_lambda(*c, p, lambda) == f);
    if (lambda != 0)
      CHECK(*c == g);

    PFD h = gen.random_pfd(p, 3);
    Reduction rh = reduce(h, p, lambda);
    CHECK(rh.residual == h + delta_lambda(rh.certificate_part, p, lambda));
    CHECK(is_summable(h, p, lambda) == rh.residual.is_zero());
    PFD moved = reduce(h + f, p, lambda).residual;
    CHECK(is_summable(moved, p, lambda) == is_summable(h, p, lambda));
    CHECK(is_summable(moved - rh.residual, p, lambda));
  }
}

TEST_CASE("property: residues are linear at a common height") {
  Gen gen(62);
  for (int trial = 0; trial < 40; ++trial) {
    int p = gen.coin() ? 2 : 3;
    int lambda = (int)gen.uniform(-1, 2);
    PFD f = gen.random_pfd(p, 3, false), g = gen.random_pfd(p, 3, false);
    AlgConst a(gen.small_rat());
    PFD sum = f + g.scaled(a);
    for (const auto &t : supp(sum, p).trees) {
      TreeResidues rf, rg, rs;
      if (t.torsion) {
        int H = 0;
        for (const PFD *x : {&f, &g})
          if (!sing(*x, t).empty())
            H = std::max(H, torsion_tree_height(*x, t));
        auto at = [&](const PFD &x) {
          return sing(x, t).empty() ? TreeResidues{} : dres_torsion(x, t, lambda, H);
        };
        rf = at(f);
        rg = at(g);
        rs = at(sum);
      } else {
        std::vector<Point> pts = sing(f, t), more = sing(g, t);
        pts.insert(pts.end(), more.begin(), more.end());
        Bouquet b = bouquet_of_points(pts, p);
        HeightOverride ov{b.height, b.root};
        auto at = [&](const PFD &x) {
          return sing(x, t).empty() ? TreeResidues{} : dres_nontorsion(x, t, lambda, ov);
        };
        rf = at(f);
        rg = at(g);
        rs = at(sum);
      }
      std::vector<ResidueEntry> all = rs.entries;
      all.insert(all.end(), rf.entries.begin(), rf.entries.end());
      all.insert(all.end(), rg.entries.begin(), rg.entries.end());
      for (const auto &en : all)
        CHECK(rs.value(en.degree, en.point) ==
              rf.value(en.degree, en.point) + a * rg.value(en.degree, en.point));
    }
  }
}
