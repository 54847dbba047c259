#pragma once

#include <optional>
#include <vector>

#include "mahler/cyclemap.hpp"

namespace mahler {

struct InfinityEntry {
  long traj = 0;
  int height = 0;
  AlgConst value;
};

struct ResidueEntry {
  int degree = 0;
  Point point;
  AlgConst value;
};

struct TreeResidues {
  Tree tree;
  int height = 0;
  // bouquet root for non-torsion trees
  Point root;
  // torsion data: residual average, section d and its image under the cycle map
  AlgConst omega;
  CycVec section;
  CycVec image;
  // nonzero entries ordered by (degree, point)
  std::vector<ResidueEntry> entries;

  AlgConst value(int k, const Point &a) const;
  bool is_zero() const { return entries.empty(); }
};

struct HeightOverride {
  int height = 0;
  // non-torsion only: root of the enlarged bouquet
  std::optional<Point> root;
};

std::vector<InfinityEntry> dres_infinity(const PFD &f, int p, int lambda);
TreeResidues dres_nontorsion(const PFD &f, const Tree &t, int lambda,
                             std::optional<HeightOverride> ov = std::nullopt);
TreeResidues dres_torsion(const PFD &f, const Tree &t, int lambda,
                          std::optional<int> height = std::nullopt);
TreeResidues dres_tree(const PFD &f, const Tree &t, int lambda);

struct Reduction {
  int p = 2;
  int lambda = 0;
  std::vector<InfinityEntry> infinity;
  std::vector<TreeResidues> trees;
  PFD residual;
  // G with residual = f + delta_lambda(G)
  PFD certificate_part;
};

Reduction reduce(const PFD &f, int p, int lambda);
bool is_summable(const PFD &f, int p, int lambda);
// g with f = p^lambda sigma(g) - g, verified; nothing when f is not summable
std::optional<PFD> certificate(const PFD &f, int p, int lambda);
std::optional<PFD> certificate_from(const Reduction &r, const PFD &f);

} // namespace mahler
