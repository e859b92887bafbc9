#pragma once

#include <vector>

#include "parkspan/partition.hpp"

namespace parkspan {

// Staircase bound (l-1+m(n-1), l-1+m(n-2), ..., l-1), declared length n.
Partition staircase(int n, int ell, int m);

// A lattice path of size n for parameters (l, m), stored as its area
// partition mu of declared length n: mu_i = number of cells left of the
// path in the i-th horizontal strip from the top, so mu_i <= l-1+m(n-i).
struct DyckPath {
  int n = 0, ell = 1, m = 1;
  Partition mu;
};

// All (l,m)-paths of size n, ascending grevlex on mu.
std::vector<DyckPath> enum_dyck_paths(int n, int ell, int m);

struct PathStats {
  Partition lambda;  // vertical-run partition = mult(mu), a partition of n
  int area = 0;      // |mu|
};
PathStats path_stats(const DyckPath& d);

// Maximal vertical runs, listed from the top strip downward:
// x = common mu-value (horizontal offset), len = its multiplicity.
struct Run {
  int x = 0, len = 0;
};
std::vector<Run> vertical_runs(const DyckPath& d);

// Preference lists (a_1..a_n), entries in 1..n.  S_n acts on the left by
// w.a = (a_{w(1)}, ..., a_{w(n)}).
using ParkingFunction = std::vector<int>;

bool is_parking_function(const ParkingFunction& a);
std::vector<ParkingFunction> enum_parking_functions(int n);
ParkingFunction permute_parking(const ParkingFunction& a, const std::vector<int>& w);

// A (1,1)-path with its runs labeled: blocks[r] = sorted car labels on run r,
// |blocks[r]| = run length.  Together these are counted by (n+1)^(n-1).
struct LabeledPath {
  DyckPath path;
  std::vector<std::vector<int>> blocks;
};

// Car i parks at column x of its run: a_i = 1 + x.
ParkingFunction parking_from_labeled(const LabeledPath& lp);
std::vector<LabeledPath> enum_labeled_paths(int n);

// Partitions fitting under staircase(n, l, m); count of the corresponding
// monomial orbit sum is l(l+mn)^(n-1).
std::vector<Partition> sub_staircase_partitions(int n, int ell, int m);
Int sub_staircase_monomial_count(int n, int ell, int m);

}  // namespace parkspan
