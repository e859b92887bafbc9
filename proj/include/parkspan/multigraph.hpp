#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "parkspan/numeric.hpp"

namespace parkspan {

// Polynomial in two variables with exact integer coefficients;
// c[i][j] is the coefficient of x^i y^j.
struct BivarPoly {
  std::vector<std::vector<Int>> c;

  static BivarPoly zero() { return {}; }
  static BivarPoly constant(const Int& k);
  static BivarPoly monomial(int i, int j, const Int& k = 1);

  Int coeff(int i, int j) const;
  void set(int i, int j, const Int& k);
  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  bool operator==(const BivarPoly& o) const;
  Int eval(const Int& x, const Int& y) const;
  std::vector<Int> at_x1() const;  // coefficients of y^j in T(1, y)
  std::string str() const;
};

// Undirected multigraph on vertices 1..v; parallel edges carry a
// multiplicity, loops are not representable (never needed here).
struct Multigraph {
  int v = 0;
  std::map<std::pair<int, int>, int> em;  // (u<w) -> multiplicity >= 1

  static Multigraph complete(int v);
  // m copies of {i,j} for i<j<=n plus l copies of {i,n+1}: the graph whose
  // slim subgraphs span the graded space for parameters (l, m).
  static Multigraph complete_lm(int n, int ell, int m);

  void add_edge(int u, int w, int mult = 1);
  int edge_total() const;  // counts multiplicity
  std::string str() const;

  // fixed total order on edge copies: lex by (u, w), then copy number
  std::vector<std::pair<int, int>> copies() const;
};

bool is_connected(const Multigraph& g);

// Tutte polynomial by deletion-contraction with parallel-class bundling and
// memoization on a degree-signature hash (exact comparison inside buckets).
BivarPoly tutte(const Multigraph& g);

// Coefficients of q^0..q^{e-v+1} in q^{e-v+1} T_G(1, 1/q); requires a
// connected g.  These are the graded dimensions of the slim-subgraph span.
std::vector<Int> tutte_hilbert(const Multigraph& g);

// True iff the q^k coefficient equals binom(v+k-2, k) for 0 <= k <= v-2.
// Holds whenever the underlying simple graph is complete; sparse graphs can
// fail (a plain cycle already does).
bool initial_coefficients_check(const Multigraph& g);

// c_i = number of lambda-colorings with exactly i monochromatic edge copies,
// for i = 0..e, by direct census of all lambda^v colorings.
std::vector<Int> coboundary_coefficients(const Multigraph& g, int lambda);

// All spanning trees as sorted lists of copy indices (into copies()).
std::vector<std::vector<int>> spanning_trees(const Multigraph& g);

// Externally active copies: f outside the tree that are minimal in their
// fundamental cycle.  Internally active: tree copies minimal in their
// fundamental cocycle.  Both use the copies() order.
std::vector<int> external_activity(const Multigraph& g, const std::vector<int>& tree);
std::vector<int> internal_activity(const Multigraph& g, const std::vector<int>& tree);

}  // namespace parkspan
