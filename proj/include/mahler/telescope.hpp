#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mahler/linalg.hpp"
#include "mahler/residues.hpp"

namespace mahler {

struct ResidueRow {
  std::string tree;
  Point point;
};

// rows indexed by (tree, point), one column per input function
struct ResidueMatrix {
  size_t cols = 0;
  std::vector<ResidueRow> rows;
  RatMatrix entries;
};

struct DependenceVerdict {
  bool dependent = false;
  std::vector<Int> coefficients;
  std::optional<RatFun> witness;
};

// x a'(x) / a(x) in partial fractions
PFD log_derivative(const RatFun &a, int p);

ResidueMatrix logderiv_residues(const std::vector<RatFun> &a, int p);
// kernel basis as coprime integer vectors with positive leading entry
std::vector<std::vector<Int>> rational_kernel(const ResidueMatrix &m);
DependenceVerdict decide_dependence(const std::vector<RatFun> &a, int p);
bool nishioka_identity_check(const RatFun &a, int lambda, const Tree &t);

} // namespace mahler
