#include <doctest.h>

#include "../common/support.hpp"
#include "mahler/mahlercoeff.hpp"

using namespace testing_support;

namespace {

// coefficient of t^(m-k) in (sum_{j<q} (1+t)^j)^(-m), by truncated series inversion
Rat series_oracle(int m, int k, int n, int p) {
  long q = ipow(p, n);
  int len = m - k + 1;
  std::vector<Rat> s(len);
  for (long j = 0; j < q; ++j) {
    Rat binom = 1;
    for (int i = 0; i < len; ++i) {
      s[i] += binom;
      binom = binom * Rat(j - i) / Rat(i + 1);
    }
  }
  std::vector<Rat> inv(len);
  inv[0] = 1 / s[0];
  for (int i = 1; i < len; ++i) {
    Rat acc = 0;
    for (int j = 1; j <= i; ++j)
      acc += s[j] * inv[i - j];
    inv[i] = -acc / s[0];
  }
  std::vector<Rat> pw(len);
  pw[0] = 1;
  for (int r = 0; r < m; ++r) {
    std::vector<Rat> nx(len);
    for (int i = 0; i < len; ++i)
      for (int j = 0; i + j < len; ++j)
        nx[i + j] += pw[i] * inv[j];
    pw = nx;
  }
  return pw[len - 1];
}

} // namespace

TEST_CASE("coefficient values") {
  CHECK(vcoeff(2, 2, 1, 2) == Rat(1, 4));
  CHECK(vcoeff(2, 1, 1, 2) == Rat(-1, 4));
  CHECK(v_partition(2, 1, 1, 2) == Rat(-1, 4));
  CHECK(vcoeff(1, 1, 1, 5) == Rat(1, 5));
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= m; ++k)
      CHECK(vcoeff(m, k, 0, 3) == Rat(k == m ? 1 : 0));
  CHECK(vcoeff(3, 3, 2, 2) == p_power(2, -6));
}

TEST_CASE("partitions with bounded parts") {
  using P = std::vector<std::vector<int>>;
  CHECK(partitions_bounded(0, 1) == P{{}});
  CHECK(partitions_bounded(2, 2) == P{{1, 1}});
  CHECK(partitions_bounded(3, 3) == P{{2, 1}, {1, 1, 1}});
  CHECK(partitions_bounded(3, 1).empty());
  CHECK(partitions_bounded(5, 100).size() == 7);
}

TEST_CASE("property: taylor and partition routes agree with a series oracle") {
  for (int p : {2, 3, 5})
    for (int n = 0; n <= 3; ++n)
      for (int m = 1; m <= 6; ++m)
        for (int k = 1; k <= m; ++k) {
          Rat want = series_oracle(m, k, n, p);
          CHECK(v_taylor(m, k, n, p) == want);
          CHECK(v_partition(m, k, n, p) == want);
          CHECK(vcoeff(m, k, n, p) == want);
        }
}

TEST_CASE("pointwise coefficients") {
  for (int p : {2, 3})
    CHECK(v_at(Point::one(), 1, 1, 1, p) == AlgConst(Rat(1, p)));
  Point a = Point::root_of_unity(1, 5);
  CHECK(v_at(a, 2, 2, 1, 3) == a.pow(2 - 6).scaled(Rat(1, 9)));
  Point r = Point::rational(Rat(3, 2));
  CHECK(v_at(r, 3, 1, 1, 2) == AlgConst(vcoeff(3, 1, 1, 2) * rat_pow(Rat(3, 2), 1 - 6)));
  CHECK(v_at(a.value(), 2, 1, 2, 2) == v_at(a, 2, 1, 2, 2));
}

TEST_CASE("property: coefficients reproduce the expansion of sigma^n") {
  // 1/(x^(p^n) - a^(p^n))^m expanded at a has degree-k coefficient v_at(a, m, k, n)
  Gen gen(31);
  for (int trial = 0; trial < 25; ++trial) {
    int p = gen.coin() ? 2 : 3;
    int n = (int)gen.uniform(1, 2), m = (int)gen.uniform(1, 3);
    Point a = gen.pick(Gen::anchors());
    PFD g;
    g.add_pole(point_power_p(a, p, n), m, AlgConst(1));
    PFD s = sigma(g, p, n);
    for (int k = 1; k <= m; ++k)
      CHECK(s.pole_coeff(a, k) == v_at(a, m, k, n, p));
  }
}
