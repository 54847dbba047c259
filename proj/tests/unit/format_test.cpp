#include <doctest.h>

#include "../common/support.hpp"
#include "mahler/format.hpp"

using namespace testing_support;

TEST_CASE("partial fraction json") {
  Json j = pfd_json(pfd("x+1/(x-2)", 2));
  CHECK(j["laurent"].size() == 1);
  CHECK(j["laurent"][0]["exponent"] == 1);
  CHECK(j["poles"][0]["point"] == Point::rational(2).str());
  CHECK(j["poles"][0]["degree"] == 1);
  CHECK(j["text"] == pfd("x+1/(x-2)", 2).str());
}

TEST_CASE("reduction json and text") {
  PFD f = pfd("1/(x-2)", 3);
  Reduction r = reduce(f, 3, 1);
  Json j = reduction_json(r, certificate_from(r, f));
  CHECK(j["p"] == 3);
  CHECK(j["lambda"] == 1);
  CHECK(j["summable"] == false);
  CHECK(j["certificate"].is_null());
  REQUIRE(j["residues"]["trees"].size() == 1);
  CHECK(j["residues"]["trees"][0]["degree"] == 1);
  CHECK(j["residues"]["trees"][0]["value"] == "1");
  CHECK(j["residual"] == parse_expr("1/(x-2)", 3).str());

  std::string text = reduction_text(r, std::nullopt);
  CHECK(text.find("summable: false") == 0);
  CHECK(text.find("certificate: none") != std::string::npos);

  PFD g = pfd("-1/(x+1)", 2);
  Reduction rg = reduce(g, 2, 1);
  Json jg = reduction_json(rg, certificate_from(rg, g));
  CHECK(jg["summable"] == true);
  CHECK(jg["certificate"] == parse_expr("1/(x-1)", 2).str());
}

TEST_CASE("verdict json and text") {
  std::vector<RatFun> a{parse_expr("x-2", 3), parse_expr("(x-2)^2", 3)};
  ResidueMatrix m = logderiv_residues(a, 3);
  DependenceVerdict v = decide_dependence(a, 3);
  Json j = verdict_json(v, m);
  CHECK(j["dependent"] == true);
  CHECK(j["k"] == Json::array({2, -1}));
  CHECK(j["matrix"]["columns"] == 2);
  CHECK(j["matrix"]["rows"][0]["values"] == Json::array({"1", "2"}));
  CHECK(verdict_text(v) == "dependent\nk: 2 -1\ng: 0\n");
  CHECK(verdict_text(decide_dependence({parse_expr("x-2", 3)}, 3)) == "independent\n");
}
