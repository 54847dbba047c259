#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mahler/ratfun.hpp"

namespace mahler {

struct Tree {
  std::string key;
  bool torsion = false;
  int p = 2;
  // canonical member: cycle minimum (torsion) or level-zero point (non-torsion)
  Point anchor;
  // gamma_0, gamma_0^p, ... ; empty for non-torsion trees
  std::vector<Point> cycle;

  long cycle_length() const { return (long)cycle.size(); }
  long cycle_index(const Point &g) const;
  bool operator==(const Tree &o) const { return key == o.key && p == o.p; }
  bool operator<(const Tree &o) const { return key < o.key; }
};

Tree tree_of(const Point &a, int p);
bool same_tree(const Point &a, const Point &b, int p);
bool in_tree(const Point &a, const Tree &t);

// p-adic valuation of the order of a root of unity
int torsion_height(const Point &a, int p);
// exponent offset of a point inside a non-torsion tree; raising to p increments it
long tree_level(const Point &a, int p);

struct Support {
  bool infinity = false;
  std::vector<Tree> trees;
};

Support supp(const PFD &f, int p);
std::vector<Point> sing(const PFD &f, const Tree &t);
int ord_at(const PFD &f, const Tree &t);
PFD tau_component(const PFD &f, const Tree &t);

struct Disp {
  bool infinite = false;
  long value = 0;
  bool operator==(const Disp &o) const { return infinite == o.infinite && value == o.value; }
  std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

Disp disp(const PFD &f, const Tree &t);
Disp disp_infinity(const PFD &f, int p);

struct Bouquet {
  Point root;
  int height = 0;
  // eta(a) for every pole a of the tree
  std::map<Point, int> eta;
};

Bouquet bouquet_of(const PFD &f, const Tree &t);
// smallest common bouquet containing the given points of one non-torsion tree
Bouquet bouquet_of_points(const std::vector<Point> &pts, int p);

// the slice of points at height h: p^h-th roots of the root (non-torsion),
// or points of torsion height exactly h (torsion)
std::vector<Point> top_slice(const Tree &t, const Point &root, int h);

} // namespace mahler
