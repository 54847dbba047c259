#include <doctest.h>

#include "../common/support.hpp"
#include "mahler/telescope.hpp"

using namespace testing_support;

namespace {

std::vector<RatFun> fns(std::initializer_list<const char *> ss, int p) {
  std::vector<RatFun> out;
  for (const char *s : ss)
    out.push_back(parse_expr(s, p));
  return out;
}

} // namespace

TEST_CASE("log derivatives") {
  CHECK(reconstruct(log_derivative(parse_expr("x-2", 3), 3)) == parse_expr("x/(x-2)", 3));
  CHECK(reconstruct(log_derivative(parse_expr("x^5", 2), 2)) == RatFun(AlgConst(5)));
  CHECK(log_derivative(parse_expr("(x-2)^3", 2), 2).pole_coeff(Point::rational(2), 1) ==
        AlgConst(6));
  CHECK_THROWS_AS(log_derivative(RatFun(), 2), ZeroDivision);
}

TEST_CASE("residue matrix") {
  ResidueMatrix m = logderiv_residues(fns({"x-2"}, 2), 2);
  REQUIRE(m.rows.size() == 1);
  CHECK(m.cols == 1);
  CHECK(m.rows[0].point == Point::rational(2));
  CHECK(m.entries[0][0] == 1);

  ResidueMatrix two = logderiv_residues(fns({"x-2", "(x-2)^2"}, 3), 3);
  REQUIRE(two.rows.size() == 1);
  CHECK(two.entries[0] == std::vector<Rat>{1, 2});
  CHECK(rational_kernel(two) == std::vector<std::vector<Int>>{{2, -1}});

  CHECK(logderiv_residues(fns({"x^3"}, 2), 2).rows.empty());
}

TEST_CASE("kernel normalization") {
  ResidueMatrix m;
  m.cols = 3;
  m.rows = {{"r", Point::one()}};
  m.entries = {{Rat(-2, 3), Rat(4, 9), Rat(0)}};
  auto k = rational_kernel(m);
  REQUIRE(k.size() == 2);
  CHECK(k[0] == std::vector<Int>{2, 3, 0});
  CHECK(k[1] == std::vector<Int>{0, 0, 1});
}

TEST_CASE("dependence verdicts") {
  DependenceVerdict ind = decide_dependence(fns({"x-2"}, 2), 2);
  CHECK_FALSE(ind.dependent);
  CHECK_FALSE(ind.witness.has_value());

  for (int p : {2, 3}) {
    DependenceVerdict v = decide_dependence(fns({"x"}, p), p);
    CHECK(v.dependent);
    CHECK(v.coefficients == std::vector<Int>{1});
    CHECK(*v.witness == RatFun(AlgConst(Rat(1, p - 1))));
  }

  DependenceVerdict pair = decide_dependence(fns({"x-2", "(x-2)^2"}, 3), 3);
  CHECK(pair.dependent);
  CHECK(pair.coefficients == std::vector<Int>{2, -1});
  CHECK(pair.witness->is_zero());

  // (x-1) is sigma-related to (x^2-1)/(x-1) = x+1 at p = 2
  DependenceVerdict mahler = decide_dependence(fns({"x-1", "x+1"}, 2), 2);
  CHECK(mahler.dependent);
  RatFun lhs;
  auto a = fns({"x-1", "x+1"}, 2);
  for (size_t i = 0; i < a.size(); ++i)
    lhs = lhs + (partial_derivation(a[i]) / a[i]).scaled(AlgConst(Rat(mahler.coefficients[i])));
  CHECK(lhs == delta_lambda(*mahler.witness, 2, 1));
}

TEST_CASE("property: residues of derivatives follow the factorial identity") {
  for (const char *a : {"x-2", "(x-2)^2*(x-3)", "x^2+1", "(x-1)*(x+1)", "x^2-x+1"})
    for (int p : {2, 3})
      for (const auto &t : supp(log_derivative(parse_expr(a, p), p), p).trees)
        for (int lambda = 1; lambda <= 3; ++lambda)
          CHECK(nishioka_identity_check(parse_expr(a, p), lambda, t));
  CHECK_THROWS_AS(nishioka_identity_check(parse_expr("x-2", 2), 0, tree_of(Point::rational(2), 2)),
                  BadTwist);
}
