#include <doctest.h>

#include "../common/support.hpp"

using namespace testing_support;

namespace {

const char *summable1 = "(-x^6+4*x^3+3*x^2-12*x+8)/((x-2)^2*(x^3-2)^2)";
const char *nonsummable1 = "(-2*x^4+2*x^2+1)/((x^2+1)*(x^4-x^2+1))";
const char *summable_m1 = "(-3*x^6+30*x^3+x^2-10*x-50)/(3*(x-5)^2*(x^3-5)^2)";

RatFun rf(const std::string &s, int p) { return parse_expr(s, p); }

// functions whose poles share one radical tower of degree at most 24 over Q
PFD one_tower(Gen &gen, int p, int max_order = 4) {
  for (;;) {
    PFD g = gen.random_pfd(p, max_order);
    bool ok = true;
    std::optional<Rat> radicand;
    long M = 1, P = 1;
    for (const auto &[a, tab] : g.poles) {
      M = std::lcm(M, (long)a.z.N);
      P = std::max(P, a.P);
      if (a.P > 1) {
        ok = ok && (!radicand || *radicand == a.r);
        radicand = a.r;
      }
    }
    if (ok && euler_phi(M) * P <= 24)
      return g;
  }
}

} // namespace

TEST_CASE("parse and print") {
  CHECK(rf("x+3", 2).str() == "x+3");
  CHECK(rf("1/(x-2)^2", 3).str() == "1/(x^2-4*x+4)");
  CHECK(rf("2x", 2) == rf("2*x", 2));
  CHECK(rf("(x^2-1)/(x-1)", 2) == rf("x+1", 2));
  CHECK_THROWS_AS(rf("x+", 2), ParseError);
  CHECK_THROWS_AS(rf("1/0", 2), ParseError);
  CHECK_THROWS_AS(rf("root(2,3)", 2), UnsupportedRadicalIndex);
  CHECK(rf("zeta(3)^3", 2) == RatFun(AlgConst(1)));
}

TEST_CASE("property: print then parse round trip") {
  Gen gen(21);
  for (int trial = 0; trial < 60; ++trial) {
    int p = gen.coin() ? 2 : 3;
    PFD g = one_tower(gen, p);
    RatFun f = reconstruct(g);
    if (!f.is_rational())
      continue;
    CHECK(rf(f.str(), p) == f);
  }
}

TEST_CASE("partial fractions of the rational examples") {
  PFD s1 = pfd(summable1, 3);
  Point two = Point::rational(2);
  CHECK(s1.laurent.empty());
  CHECK(s1.pole_coeff(two, 2) == AlgConst(-1));
  CHECK(s1.pole_coeff(two, 1) == AlgConst(0));
  AlgConst rho = AlgConst::radical(2, 3);
  for (int i = 0; i < 3; ++i) {
    Point g = Point::make(QZ::of(i, 3), 2, 3);
    AlgConst zi = AlgConst::zeta(3, i);
    CHECK(s1.pole_coeff(g, 2) == (zi * zi) * (rho * AlgConst(6)).inverse());
    CHECK(s1.pole_coeff(g, 1) == -zi * (rho * rho * AlgConst(3)).inverse());
  }

  PFD n1 = pfd(nonsummable1, 3);
  CHECK(n1.laurent.empty());
  CHECK(n1.poles.size() == 6);
  CHECK(n1.pole_coeff(Point::root_of_unity(1, 12), 1) == AlgConst::zeta(12, 7).scaled(Rat(1, 2)));
  CHECK(n1.pole_coeff(Point::root_of_unity(1, 4), 1) == AlgConst::zeta(4, 3).scaled(Rat(-1, 2)));

  PFD lin = pfd("x+3", 2);
  CHECK(lin.poles.empty());
  CHECK(lin.laurent_coeff(0) == AlgConst(3));
  CHECK(lin.laurent_coeff(1) == AlgConst(1));
}

TEST_CASE("reconstruct") {
  CHECK(reconstruct(PFD()).is_zero());
  PFD c;
  c.add_laurent(0, AlgConst(Rat(5, 7)));
  CHECK(reconstruct(c) == RatFun(AlgConst(Rat(5, 7))));
  CHECK(reconstruct(pfd(summable_m1, 3)) == rf(summable_m1, 3));
}

TEST_CASE("property: decomposition matches the rational function numerically") {
  Gen gen(22);
  for (int trial = 0; trial < 60; ++trial) {
    int p = gen.coin() ? 2 : 3;
    PFD g = one_tower(gen, p);
    RatFun f = reconstruct(g);
    PFD back = pf_decompose(f, p);
    CHECK(back == g);
    Cx x0(0.37, 1.13);
    CHECK(close(eval(f, x0), eval(g, x0), 1e-6));
  }
}

TEST_CASE("mahler operator and twisted difference") {
  CHECK(sigma(rf("1/(x-1)", 2), 2) == rf("1/(x^2-1)", 2));
  CHECK(sigma(RatFun::x(), 3, 2) == rf("x^9", 3));
  CHECK(sigma(RatFun(AlgConst(7)), 5) == RatFun(AlgConst(7)));
  CHECK(delta_lambda(rf("1/(x-2)^2", 3), 3, 1) == rf(summable1, 3));
  CHECK(delta_lambda(rf("1/(x-1)", 2), 2, 1) == rf("-1/(x+1)", 2));
  for (int lambda : {-2, -1, 1, 3}) {
    Rat c = Rat(5, 3) / (p_power(2, lambda) - 1);
    CHECK(delta_lambda(RatFun(AlgConst(c)), 2, lambda) == RatFun(AlgConst(Rat(5, 3))));
  }
}

TEST_CASE("derivation") {
  CHECK(partial_derivation(RatFun::x()) == RatFun::x());
  CHECK(partial_derivation(RatFun(AlgConst(4))).is_zero());
  CHECK(partial_derivation(rf("1/(x-2)", 2)) == rf("-x/(x-2)^2", 2));
}

TEST_CASE("property: operators commute with decomposition") {
  Gen gen(23);
  for (int trial = 0; trial < 40; ++trial) {
    int p = gen.coin() ? 2 : 3;
    int lambda = (int)gen.uniform(-2, 2);
    PFD g = one_tower(gen, p, 3);
    RatFun f = reconstruct(g);
    CHECK(reconstruct(sigma(g, p)) == sigma(f, p));
    CHECK(reconstruct(delta_lambda(g, p, lambda)) == delta_lambda(f, p, lambda));
    CHECK(reconstruct(partial_derivation(g)) == partial_derivation(f));
    CHECK(partial_derivation(sigma(g, p)) == sigma(partial_derivation(g), p).scaled(AlgConst(p)));
  }
}

TEST_CASE("trajectory components") {
  PFD f = pfd("x+x^2+x^3", 2);
  CHECK(trajectory_of(1, 2) == 1);
  CHECK(trajectory_of(12, 2) == 3);
  CHECK(trajectory_of(-4, 2) == -1);
  CHECK(trajectory_of(0, 3) == 0);
  CHECK(reconstruct(theta_component(f, 1, 2)) == rf("x+x^2", 2));
  CHECK(reconstruct(theta_component(f, 3, 2)) == rf("x^3", 2));
  CHECK(reconstruct(theta_component(pfd("x+4", 2), 0, 2)) == RatFun(AlgConst(4)));
}

TEST_CASE("property: sigma preserves trajectories") {
  Gen gen(24);
  for (int trial = 0; trial < 40; ++trial) {
    int p = gen.coin() ? 2 : 3;
    PFD g = gen.random_pfd(p);
    for (const auto &[e, c] : g.laurent) {
      long t = trajectory_of(e, p);
      CHECK(theta_component(sigma(g, p), t, p) == sigma(theta_component(g, t, p), p));
    }
  }
}
