#include "mahler/format.hpp"

#include <sstream>

namespace mahler {

namespace {

std::string int_str(const Int &n) { return n.get_str(); }

Json coefficients_json(const std::vector<Int> &k) {
  Json out = Json::array();
  for (const auto &x : k)
    out.push_back(x.fits_slong_p() ? Json(x.get_si()) : Json(int_str(x)));
  return out;
}

} // namespace

Json pfd_json(const PFD &f) {
  Json laurent = Json::array(), poles = Json::array();
  for (const auto &[e, c] : f.laurent)
    laurent.push_back({{"exponent", e}, {"value", c.str()}});
  for (const auto &[a, tab] : f.poles)
    for (const auto &[k, c] : tab)
      poles.push_back({{"point", a.str()}, {"degree", k}, {"value", c.str()}});
  return {{"laurent", laurent}, {"poles", poles}, {"text", f.str()}};
}

Json cycvec_json(const CycVec &v, const Tree &t) {
  Json out = Json::array();
  for (int k = 1; k <= v.max_degree; ++k)
    for (size_t i = 0; i < t.cycle.size(); ++i)
      if (!v.at(k, i).is_zero())
        out.push_back({{"degree", k}, {"gamma", t.cycle[i].str()}, {"value", v.at(k, i).str()}});
  return out;
}

Json residues_json(const Reduction &r) {
  Json inf = Json::array(), trees = Json::array();
  for (const auto &en : r.infinity)
    inf.push_back({{"traj", en.traj}, {"value", en.value.str()}});
  for (const auto &tr : r.trees)
    for (const auto &en : tr.entries)
      trees.push_back({{"tree", tr.tree.key},
                       {"degree", en.degree},
                       {"point", en.point.str()},
                       {"value", en.value.str()}});
  return {{"infinity", inf}, {"trees", trees}};
}

Json reduction_json(const Reduction &r, const std::optional<PFD> &certificate) {
  Json out;
  out["p"] = r.p;
  out["lambda"] = r.lambda;
  out["summable"] = r.residual.is_zero();
  out["residues"] = residues_json(r);
  out["certificate"] = certificate ? Json(reconstruct(*certificate).str()) : Json(nullptr);
  out["residual"] = reconstruct(r.residual).str();
  return out;
}

Json matrix_json(const ResidueMatrix &m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows.size(); ++i) {
    Json vals = Json::array();
    for (const auto &q : m.entries[i])
      vals.push_back(rat_str(q));
    rows.push_back({{"tree", m.rows[i].tree}, {"point", m.rows[i].point.str()}, {"values", vals}});
  }
  return {{"columns", m.cols}, {"rows", rows}};
}

Json verdict_json(const DependenceVerdict &v, const ResidueMatrix &m) {
  Json out;
  out["dependent"] = v.dependent;
  out["k"] = v.dependent ? coefficients_json(v.coefficients) : Json(nullptr);
  out["g"] = v.witness ? Json(v.witness->str()) : Json(nullptr);
  out["matrix"] = matrix_json(m);
  return out;
}

std::string reduction_text(const Reduction &r, const std::optional<PFD> &certificate) {
  std::ostringstream os;
  os << "summable: " << (r.residual.is_zero() ? "true" : "false") << "\n";
  for (const auto &en : r.infinity)
    os << "dres infinity traj " << en.traj << ": " << en.value.str() << "\n";
  for (const auto &tr : r.trees)
    for (const auto &en : tr.entries)
      os << "dres " << tr.tree.key << " degree " << en.degree << " at " << en.point.str() << ": "
         << en.value.str() << "\n";
  os << "residual: " << reconstruct(r.residual).str() << "\n";
  os << "certificate: " << (certificate ? reconstruct(*certificate).str() : "none") << "\n";
  return os.str();
}

std::string verdict_text(const DependenceVerdict &v) {
  std::ostringstream os;
  os << (v.dependent ? "dependent" : "independent") << "\n";
  if (v.dependent) {
    os << "k:";
    for (const auto &x : v.coefficients)
      os << " " << int_str(x);
    os << "\ng: " << v.witness->str() << "\n";
  }
  return os.str();
}

} // namespace mahler
