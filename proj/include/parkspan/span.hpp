#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "parkspan/characters.hpp"
#include "parkspan/combinatorics.hpp"
#include "parkspan/polynomial.hpp"

namespace parkspan {

enum class GroupSide { Sn, Snp1 };

struct SpanOptions {
  long max_products = 200000;  // guard: product of (capacity+1) over edge slots
  int max_n_unit = 5;          // guard for (l, m) = (1, 1)
  int threads = 1;             // degree pieces are independent work units
  bool full_invariance_check = false;
  bool reverse_insertion = false;  // feed generators in reverse (tests only)
};

// One graded piece in row-echelon form over the degree's monomials.  Rows are
// primitive integer vectors (gcd 1, positive leading coefficient); pivots are
// the grevlex-largest monomials.  Kept in int64 while the entries fit, with a
// transparent arbitrary-precision fallback.
struct DegreePiece {
  int degree = 0;
  bool rref = false;
  bool wide = false;
  std::vector<std::vector<std::pair<Exp, long long>>> rows_i;
  std::vector<std::vector<std::pair<Exp, Int>>> rows_z;

  long rank() const {
    return static_cast<long>(wide ? rows_z.size() : rows_i.size());
  }
  Exp pivot(size_t r) const { return wide ? rows_z[r][0].first : rows_i[r][0].first; }
  Polynomial row_poly(size_t r, int nvars) const;
};

struct GradedSpan {
  int n = 0, ell = 1, m = 1;
  int nvars = 0;  // n + 1
  std::vector<DegreePiece> pieces;

  long dim() const;
  std::vector<long> hilbert() const;
};

// Edge slots (i, j, capacity) of the defining multigraph, sorted by (i, j):
// capacity m between 1 <= i < j <= n, capacity l from each i to n+1.
std::vector<std::tuple<int, int, int>> edge_slots(int n, int ell, int m);

// Multiplicity vectors (aligned with edge_slots) whose complement has
// connected support on all n+1 vertices: the slim subgraphs.
std::vector<std::vector<int>> enum_slim(int n, int ell, int m,
                                        const SpanOptions& opts = {});

// Row-reduce the weight polynomials of every slim subgraph, degree by degree.
GradedSpan build_span(int n, int ell, int m, const SpanOptions& opts = {});

// Character of the degree-k piece: trace of a representative permutation of
// each cycle type on the echelon basis.  GroupSide::Sn permutes x_1..x_n and
// fixes x_{n+1}; GroupSide::Snp1 permutes all variables and requires l == m.
// Finalizes the piece to reduced echelon form (hence non-const).
ClassFunction degree_character(GradedSpan& s, int k, GroupSide side,
                               const SpanOptions& opts = {});

// Representative permutation (1-based images) of a cycle type, cycles laid
// out consecutively: (3,2) on 5 -> [2,3,1,5,4].
std::vector<int> class_rep_perm(const Partition& tau);

// Row i of the box diagram lists its usable edges left to right: {i,j} for
// j > i in decreasing order of j with full multiplicity, except {i,i+1} with
// one copy fewer; row n carries l-1 copies of {n, n+1}.
std::vector<std::vector<std::pair<int, int>>> box_labeling(int n, int ell, int m);

// Edge multiset of G(D): row i keeps its first mu_i boxes.  path_poly is its
// weight polynomial in x_1..x_{n+1}.
std::vector<std::tuple<int, int, int>> path_graph(const DyckPath& d);
Polynomial path_poly(const DyckPath& d);

// Substitute x_{n+1} = 0, then drop monomials whose exponent partition does
// not fit under the staircase.
Polynomial phi(const Polynomial& p, int n, int ell, int m);

// phi(p(D)) has leading term exactly x^{mu(D)} with coefficient 1 and every
// other exponent partition strictly grevlex-smaller than mu(D).  Returns the
// verdict together with the leading monomial actually found.
std::pair<bool, Exp> check_triangularity(const DyckPath& d);

// The image of the echelon basis under phi has full rank equal to both the
// span dimension and the number of sub-staircase monomials.
bool phi_is_isomorphism(const GradedSpan& s);

// p(K_{n+1} - (T u ex(T))) over spanning trees T of K_{n+1}.
std::vector<Polynomial> external_activity_basis(int n, const SpanOptions& opts = {});

// Exact rank of an arbitrary set of polynomials (test helper).
long rank_of(const std::vector<Polynomial>& polys, int nvars);

}  // namespace parkspan
