#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mahler/format.hpp"
#include "mahler/mahlercoeff.hpp"
#include "mahler/parse.hpp"

namespace mahler::cli {

namespace {

enum Exit { Ok = 0, Failure = 1, Usage = 2, Unsupported = 3, Verification = 4 };

struct Options {
  int p = 2;
  int lambda = 0;
  bool has_lambda = false;
  bool json = false;
};

void need_lambda(const Options &o, const std::string &verb) {
  if (!o.has_lambda)
    throw CLI::RequiredError(verb + " needs --lambda");
}

Reduction reduce_expr(const std::string &s, const Options &o, PFD &f) {
  f = pf_decompose(parse_expr(s, o.p), o.p);
  return reduce(f, o.p, o.lambda);
}

void cmd_decompose(const std::string &s, const Options &o, std::ostream &out) {
  PFD f = pf_decompose(parse_expr(s, o.p), o.p);
  if (o.json)
    out << pfd_json(f).dump() << "\n";
  else
    out << f.str() << "\n";
}

void cmd_residues(const std::string &s, const Options &o, std::ostream &out) {
  need_lambda(o, "residues");
  PFD f;
  Reduction r = reduce_expr(s, o, f);
  if (o.json) {
    out << reduction_json(r, certificate_from(r, f)).dump() << "\n";
    return;
  }
  bool any = false;
  for (const auto &en : r.infinity) {
    out << "infinity traj " << en.traj << ": " << en.value.str() << "\n";
    any = true;
  }
  for (const auto &tr : r.trees)
    for (const auto &en : tr.entries) {
      out << tr.tree.key << " degree " << en.degree << " at " << en.point.str() << ": "
          << en.value.str() << "\n";
      any = true;
    }
  if (!any)
    out << "all residues vanish\n";
}

void cmd_summable(const std::string &s, const Options &o, std::ostream &out) {
  need_lambda(o, "summable");
  PFD f;
  Reduction r = reduce_expr(s, o, f);
  if (o.json)
    out << reduction_json(r, certificate_from(r, f)).dump() << "\n";
  else
    out << (r.residual.is_zero() ? "true" : "false") << "\n";
}

void cmd_reduce(const std::string &s, const Options &o, std::ostream &out) {
  need_lambda(o, "reduce");
  PFD f;
  Reduction r = reduce_expr(s, o, f);
  if (!(r.residual == f + delta_lambda(r.certificate_part, o.p, o.lambda)))
    throw InternalVerificationFailure("reduction identity fails");
  auto g = certificate_from(r, f);
  if (o.json) {
    Json j = reduction_json(r, g);
    j["certificate_part"] = reconstruct(r.certificate_part).str();
    out << j.dump() << "\n";
  } else {
    out << reduction_text(r, g);
    out << "certificate_part: " << reconstruct(r.certificate_part).str() << "\n";
  }
}

void cmd_certify(const std::string &s, const Options &o, std::ostream &out) {
  need_lambda(o, "certify");
  PFD f;
  Reduction r = reduce_expr(s, o, f);
  auto g = certificate_from(r, f);
  if (o.json)
    out << reduction_json(r, g).dump() << "\n";
  else
    out << (g ? reconstruct(*g).str() : "none") << "\n";
}

void cmd_telescope(const std::vector<std::string> &exprs, const Options &o, std::ostream &out) {
  std::vector<RatFun> a;
  for (const auto &s : exprs)
    a.push_back(parse_expr(s, o.p));
  ResidueMatrix m = logderiv_residues(a, o.p);
  DependenceVerdict v = decide_dependence(a, o.p);
  if (o.json)
    out << verdict_json(v, m).dump() << "\n";
  else
    out << verdict_text(v);
}

void cmd_vcoeff(int m, int k, int n, const Options &o, std::ostream &out) {
  if (m < 1 || k < 1 || k > m || n < 0)
    throw CLI::ValidationError("vcoeff needs 1 <= k <= m and n >= 0");
  Rat v = vcoeff(m, k, n, o.p);
  if (o.json)
    out << Json{{"p", o.p}, {"m", m}, {"k", k}, {"n", n}, {"value", rat_str(v)}}.dump() << "\n";
  else
    out << rat_str(v) << "\n";
}

void cmd_disp(const std::string &s, const Options &o, std::ostream &out) {
  PFD f = pf_decompose(parse_expr(s, o.p), o.p);
  Support sp = supp(f, o.p);
  auto value = [](const Disp &d) { return d.infinite ? Json("inf") : Json(d.value); };
  auto text = [](const Disp &d) { return d.infinite ? std::string("inf") : std::to_string(d.value); };
  if (o.json) {
    Json trees = Json::array();
    for (const auto &t : sp.trees)
      trees.push_back({{"tree", t.key}, {"disp", value(disp(f, t))}});
    Json j;
    j["infinity"] = sp.infinity ? value(disp_infinity(f, o.p)) : Json(nullptr);
    j["trees"] = trees;
    out << j.dump() << "\n";
    return;
  }
  if (sp.infinity)
    out << "infinity: " << text(disp_infinity(f, o.p)) << "\n";
  for (const auto &t : sp.trees)
    out << t.key << ": " << text(disp(f, t)) << "\n";
}

bool json_subset(const Json &want, const Json &got) {
  if (want.is_object()) {
    if (!got.is_object())
      return false;
    for (const auto &[k, v] : want.items())
      if (!got.contains(k) || !json_subset(v, got.at(k)))
        return false;
    return true;
  }
  if (want.is_array()) {
    if (!got.is_array() || got.size() != want.size())
      return false;
    for (size_t i = 0; i < want.size(); ++i)
      if (!json_subset(want[i], got[i]))
        return false;
    return true;
  }
  return want == got;
}

std::string check_fixture(const Json &fx) {
  std::vector<std::string> args = fx.at("command").get<std::vector<std::string>>();
  const Json &expect = fx.at("expect");
  std::ostringstream out, err;
  int code = run(args, out, err);
  int want_code = expect.value("exit", 0);
  if (code != want_code)
    return "exit " + std::to_string(code) + ", expected " + std::to_string(want_code) + " " +
           err.str();
  if (expect.contains("stdout") && out.str() != expect.at("stdout").get<std::string>())
    return "stdout was '" + out.str() + "'";
  if (expect.contains("contains"))
    for (const auto &s : expect.at("contains"))
      if (out.str().find(s.get<std::string>()) == std::string::npos)
        return "stdout lacks '" + s.get<std::string>() + "'";
  if (expect.contains("json")) {
    Json got = Json::parse(out.str(), nullptr, false);
    if (got.is_discarded() || !json_subset(expect.at("json"), got))
      return "json mismatch: " + out.str();
  }
  return "";
}

} // namespace

int run_fixtures(const std::string &path, std::ostream &out, std::ostream &err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot open " << path << "\n";
    return Usage;
  }
  std::string line;
  int lineno = 0, failed = 0, total = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }))
      continue;
    ++total;
    std::string why;
    try {
      why = check_fixture(Json::parse(line));
    } catch (const std::exception &e) {
      why = std::string("malformed fixture: ") + e.what();
    }
    if (why.empty()) {
      out << "ok   line " << lineno << "\n";
    } else {
      out << "FAIL line " << lineno << ": " << why << "\n";
      ++failed;
    }
  }
  out << (total - failed) << "/" << total << " fixtures passed\n";
  return failed ? Failure : Ok;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Twisted Mahler discrete residues and summability"};
  app.name("mahler");
  std::string fixtures;
  app.add_option("--p", o.p, "radix p >= 2")->check(CLI::Range(2, 1 << 20));
  auto *lam = app.add_option("--lambda", o.lambda, "twist lambda");
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--fixtures", fixtures, "run a fixture corpus (JSON lines)");

  std::string expr;
  std::vector<std::string> exprs;
  int vm = 0, vk = 0, vn = 0;
  std::string verb;
  auto verb_with_expr = [&](const std::string &name, const std::string &help) {
    auto *sc = app.add_subcommand(name, help);
    sc->add_option("expr", expr, "rational function")->required();
    sc->callback([&, name] { verb = name; });
  };
  verb_with_expr("decompose", "partial fraction decomposition");
  verb_with_expr("residues", "discrete residues");
  verb_with_expr("summable", "summability decision");
  verb_with_expr("reduce", "reduction with residual and certificate part");
  verb_with_expr("certify", "certificate g with f = p^lambda g(x^p) - g(x)");
  verb_with_expr("disp", "Mahler dispersions");
  auto *tel = app.add_subcommand("telescope", "differential dependence of log-derivatives");
  tel->add_option("exprs", exprs, "rational functions a_1 ... a_t")->required();
  tel->callback([&] { verb = "telescope"; });
  auto *vc = app.add_subcommand("vcoeff", "universal Mahler coefficient for given m k n");
  vc->add_option("m", vm)->required();
  vc->add_option("k", vk)->required();
  vc->add_option("n", vn)->required();
  vc->callback([&] { verb = "vcoeff"; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    o.has_lambda = lam->count() > 0;
    if (!fixtures.empty())
      return run_fixtures(fixtures, out, err);
    if (verb.empty())
      throw CLI::RequiredError("a command");
    if (verb == "decompose")
      cmd_decompose(expr, o, out);
    else if (verb == "residues")
      cmd_residues(expr, o, out);
    else if (verb == "summable")
      cmd_summable(expr, o, out);
    else if (verb == "reduce")
      cmd_reduce(expr, o, out);
    else if (verb == "certify")
      cmd_certify(expr, o, out);
    else if (verb == "disp")
      cmd_disp(expr, o, out);
    else if (verb == "telescope")
      cmd_telescope(exprs, o, out);
    else
      cmd_vcoeff(vm, vk, vn, o, out);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << "\n";
    return Usage;
  } catch (const UnsupportedDenominator &e) {
    err << "unsupported: " << e.what() << "\n";
    return Unsupported;
  } catch (const UnsupportedAlgebraicPoint &e) {
    err << "unsupported: " << e.what() << "\n";
    return Unsupported;
  } catch (const InternalVerificationFailure &e) {
    err << "verification failed: " << e.what() << "\n";
    return Verification;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return Failure;
  }
  return Ok;
}

} // namespace mahler::cli
