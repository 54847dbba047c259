#pragma once

#include <optional>
#include <vector>

#include "mahler/trees.hpp"

namespace mahler {

// coefficient vectors on a cycle: v[k-1][i] is the degree-k entry at tree.cycle[i]
struct CycVec {
  int max_degree = 0;
  size_t length = 0;
  std::vector<std::vector<AlgConst>> v;

  static CycVec zero(int m, size_t e);
  size_t cycle_length() const { return length; }
  AlgConst at(int k, size_t i) const;
  void set(int k, size_t i, const AlgConst &c);
  bool is_zero() const;
  // highest degree carrying a nonzero entry
  int top_degree() const;
  CycVec padded(int m) const;

  friend CycVec operator+(const CycVec &a, const CycVec &b);
  friend CycVec operator-(const CycVec &a, const CycVec &b);
  CycVec scaled(const AlgConst &c) const;
  friend bool operator==(const CycVec &a, const CycVec &b);
};

CycVec cyclic_component(const PFD &f, const Tree &t);
PFD cycvec_to_pfd(const CycVec &v, const Tree &t);

CycVec d_apply(const CycVec &v, const Tree &t, int lambda);
CycVec kernel_vector(const Tree &t, int lambda);
CycVec section(const CycVec &c, const Tree &t, int lambda, const AlgConst &omega);

// torsion height of f in the tree (max over its poles)
int torsion_tree_height(const PFD &f, const Tree &t);
AlgConst residual_average(const PFD &f, const Tree &t, int lambda,
                          std::optional<int> height = std::nullopt);

} // namespace mahler
