#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "parkspan/multigraph.hpp"
#include "parkspan/span.hpp"
#include "parkspan/symfunc.hpp"

using namespace parkspan;

namespace {

// independent slim-subgraph count: sum over connected spanning edge subsets S
// of K_{n+1} of the product of slot capacities inside S
long slim_count_oracle(int n, int ell, int m) {
  auto slots = edge_slots(n, ell, m);
  int ec = static_cast<int>(slots.size());
  REQUIRE(ec <= 20);
  long total = 0;
  for (unsigned long mask = 0; mask < (1UL << ec); ++mask) {
    std::vector<int> parent(n + 2);
    for (int i = 0; i <= n + 1; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    int comps = n + 1;
    long product = 1;
    for (int b = 0; b < ec; ++b)
      if (mask >> b & 1) {
        auto [i, j, cap] = slots[b];
        product *= cap;
        int a = find(i), c = find(j);
        if (a != c) {
          parent[a] = c;
          --comps;
        }
      }
    if (comps == 1) total += product;
  }
  return total;
}

std::vector<Polynomial> all_row_polys(GradedSpan& s) {
  std::vector<Polynomial> out;
  for (auto& piece : s.pieces)
    for (long r = 0; r < piece.rank(); ++r)
      out.push_back(piece.row_poly(r, s.nvars));
  return out;
}

}  // namespace

TEST_CASE("edge slots of the defining multigraph") {
  auto slots = edge_slots(2, 1, 1);
  REQUIRE(slots.size() == 3);
  CHECK(slots[0] == std::tuple{1, 2, 1});
  CHECK(slots[1] == std::tuple{1, 3, 1});
  CHECK(slots[2] == std::tuple{2, 3, 1});

  for (auto [i, j, cap] : edge_slots(3, 2, 3))
    CHECK(cap == (j == 4 ? 2 : 3));
}

TEST_CASE("slim subgraph enumeration") {
  auto slim2 = enum_slim(2, 1, 1);
  REQUIRE(slim2.size() == 4);
  std::set<std::string> polys;
  for (auto& mult : slim2) {
    std::vector<std::tuple<int, int, int>> edges;
    auto slots = edge_slots(2, 1, 1);
    for (size_t b = 0; b < slots.size(); ++b)
      edges.emplace_back(std::get<0>(slots[b]), std::get<1>(slots[b]), mult[b]);
    polys.insert(graph_weight(edges, 3).str());
  }
  CHECK(polys == std::set<std::string>{"1", "x1 - x2", "x1 - x3", "x2 - x3"});

  CHECK(enum_slim(3, 1, 1).size() == 38);
  CHECK(enum_slim(3, 1, 1).size() == static_cast<size_t>(slim_count_oracle(3, 1, 1)));
  CHECK(enum_slim(3, 2, 2).size() == static_cast<size_t>(slim_count_oracle(3, 2, 2)));
  CHECK(enum_slim(3, 1, 2).size() == static_cast<size_t>(slim_count_oracle(3, 1, 2)));
  CHECK(enum_slim(2, 3, 1).size() == static_cast<size_t>(slim_count_oracle(2, 3, 1)));

  // guards: the unit family is capped by max_n_unit, everything else by the
  // product bound
  SpanOptions tight;
  tight.max_n_unit = 3;
  CHECK_THROWS_AS(enum_slim(4, 1, 1, tight), GuardError);
  tight.max_products = 10;
  CHECK_THROWS_AS(enum_slim(3, 2, 2, tight), GuardError);
}

TEST_CASE("span dimensions and graded dimensions") {
  GradedSpan s2 = build_span(2, 1, 1);
  CHECK(s2.dim() == 3);
  CHECK(s2.hilbert() == std::vector<long>{1, 2});
  CHECK(s2.nvars == 3);

  GradedSpan s3 = build_span(3, 1, 1);
  CHECK(s3.dim() == 16);
  CHECK(s3.hilbert() == std::vector<long>{1, 3, 6, 6});

  CHECK(build_span(4, 1, 1).dim() == 125);
  CHECK(build_span(3, 1, 2).dim() == 49);
  CHECK(build_span(2, 3, 2).dim() == 3L * 7);
}

TEST_CASE("echelon rows are primitive and pivot-sorted") {
  GradedSpan s = build_span(3, 1, 1);
  for (auto& piece : s.pieces) {
    std::set<Exp> pivots;
    for (long r = 0; r < piece.rank(); ++r) {
      Polynomial p = piece.row_poly(r, s.nvars);
      REQUIRE(!p.zero());
      CHECK(p.degree() == piece.degree);
      CHECK(p.homogeneous());
      CHECK(p.terms.front().second > 0);  // positive leading coefficient
      Int content = 0;
      for (auto& [e, c] : p.terms) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      CHECK(content == 1);
      pivots.insert(p.terms.front().first);
    }
    CHECK(pivots.size() == static_cast<size_t>(piece.rank()));
  }
}

TEST_CASE("degree characters of the smallest spans") {
  GradedSpan s2 = build_span(2, 1, 1);
  ClassFunction c1 = degree_character(s2, 1, GroupSide::Snp1);
  CHECK(c1.v == std::vector<Rat>{2, 0, -1});
  CHECK(degree_character(s2, 0, GroupSide::Snp1) == trivial_character(3));

  GradedSpan s3 = build_span(3, 1, 1);
  CHECK(degree_character(s3, 3, GroupSide::Snp1) ==
        irreducible_character(4, Partition{3, 1}) +
            irreducible_character(4, Partition{2, 1, 1}));

  // out-of-range degree is the zero class function
  ClassFunction zero = degree_character(s3, 99, GroupSide::Snp1);
  for (auto& val : zero.v) CHECK(val == 0);

  // the bigger group only acts when the two parameters agree
  GradedSpan s12 = build_span(3, 1, 2);
  CHECK_THROWS_AS(degree_character(s12, 0, GroupSide::Snp1), std::invalid_argument);
  CHECK(degree_character(s12, 0, GroupSide::Sn) == trivial_character(3));
}

TEST_CASE("characters are independent of generator insertion order") {
  SpanOptions fwd, rev;
  rev.reverse_insertion = true;
  rev.full_invariance_check = true;
  GradedSpan a = build_span(3, 1, 1, fwd);
  GradedSpan b = build_span(3, 1, 1, rev);
  CHECK(a.hilbert() == b.hilbert());
  for (int k = 0; k < static_cast<int>(a.pieces.size()); ++k) {
    CHECK(degree_character(a, k, GroupSide::Snp1, fwd) ==
          degree_character(b, k, GroupSide::Snp1, rev));
    CHECK(degree_character(a, k, GroupSide::Sn, fwd) ==
          degree_character(b, k, GroupSide::Sn, rev));
  }

  GradedSpan c = build_span(3, 1, 2, fwd);
  GradedSpan d = build_span(3, 1, 2, rev);
  for (int k = 0; k < static_cast<int>(c.pieces.size()); ++k)
    CHECK(degree_character(c, k, GroupSide::Sn, fwd) ==
          degree_character(d, k, GroupSide::Sn, rev));
}

TEST_CASE("representative permutations") {
  CHECK(class_rep_perm(Partition{3, 2}) == std::vector<int>{2, 3, 1, 5, 4});
  CHECK(class_rep_perm(Partition{1, 1, 1}) == std::vector<int>{1, 2, 3});
  CHECK(class_rep_perm(Partition{4}) == std::vector<int>{2, 3, 4, 1});
}

TEST_CASE("box labels and path polynomials") {
  auto rows = box_labeling(5, 1, 1);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::pair<int, int>>{{1, 6}, {1, 5}, {1, 4}, {1, 3}});
  CHECK(rows[4].empty());

  auto rows32 = box_labeling(4, 3, 2);
  CHECK(rows32[0] == std::vector<std::pair<int, int>>{
                         {1, 5}, {1, 5}, {1, 5}, {1, 4}, {1, 4}, {1, 3}, {1, 3}, {1, 2}});
  CHECK(rows32[3] == std::vector<std::pair<int, int>>{{4, 5}, {4, 5}});
  CHECK_THROWS_AS(box_labeling(0, 1, 1), std::invalid_argument);

  // figure-sized example: mu = (4,2,1,0,0) at the unit parameters
  DyckPath d{5, 1, 1, Partition{4, 2, 1, 0, 0}};
  Polynomial expected = graph_weight(
      {{1, 6, 1}, {1, 5, 1}, {1, 4, 1}, {1, 3, 1}, {2, 6, 1}, {2, 5, 1}, {3, 6, 1}}, 6);
  CHECK(path_poly(d) == expected);
  CHECK(path_poly(d).degree() == 7);

  // two-parameter example: mu = (5,3,3,1) at (3,2)
  DyckPath d32{4, 3, 2, Partition{5, 3, 3, 1}};
  Polynomial expected32 = graph_weight(
      {{1, 5, 3}, {1, 4, 2}, {2, 5, 3}, {3, 5, 3}, {4, 5, 1}}, 5);
  CHECK(path_poly(d32) == expected32);
  CHECK(path_poly(d32).degree() == 12);

  DyckPath flat{3, 1, 1, Partition{0, 0, 0}};
  CHECK(path_poly(flat) == Polynomial::constant(4, 1));
}

TEST_CASE("path degree and slim complement across whole families") {
  for (auto [n, ell, m] : {std::tuple{4, 1, 1}, {3, 2, 2}, {3, 1, 2}})
    for (auto& d : enum_dyck_paths(n, ell, m)) {
      Polynomial p = path_poly(d);
      CHECK(p.degree() == path_stats(d).area);
      CHECK(p.homogeneous());

      // complement in the defining multigraph keeps all vertices connected
      Multigraph complement = Multigraph::complete_lm(n, ell, m);
      for (auto& [i, j, g] : path_graph(d))
        if (g > 0) complement.add_edge(i, j, -g);
      CHECK(is_connected(complement));
    }
}

TEST_CASE("projection onto sub-staircase monomials") {
  // substitute the last variable to zero, then keep fitting monomials only
  Polynomial p(4);
  p.terms.emplace_back(exp_of({3, 0, 0, 0}), Int(5));   // (3) does not fit under (2,1,0)
  p.terms.emplace_back(exp_of({2, 1, 0, 0}), Int(2));   // (2,1) fits
  p.terms.emplace_back(exp_of({1, 2, 0, 0}), Int(7));   // sorted (2,1) fits
  p.terms.emplace_back(exp_of({1, 1, 0, 1}), Int(9));   // killed by the substitution
  p.sort_combine();
  Polynomial q = phi(p, 3, 1, 1);
  CHECK(q.coefficient_of(exp_of({3, 0, 0, 0})) == 0);
  CHECK(q.coefficient_of(exp_of({2, 1, 0, 0})) == 2);
  CHECK(q.coefficient_of(exp_of({1, 2, 0, 0})) == 7);
  CHECK(q.coefficient_of(exp_of({1, 1, 0, 1})) == 0);
  CHECK(phi(Polynomial::constant(4, 1), 3, 1, 1) == Polynomial::constant(4, 1));
}

TEST_CASE("leading terms of projected path polynomials") {
  DyckPath d{5, 1, 1, Partition{4, 2, 1, 0, 0}};
  auto [ok, lead] = check_triangularity(d);
  CHECK(ok);
  CHECK(lead == exp_of({4, 2, 1, 0, 0}));
  Polynomial pr = phi(path_poly(d), 5, 1, 1);
  CHECK(pr.terms.front().first == exp_of({4, 2, 1, 0, 0, 0}));
  CHECK(pr.terms.front().second == 1);

  DyckPath d32{4, 3, 2, Partition{5, 3, 3, 1}};
  auto [ok32, lead32] = check_triangularity(d32);
  CHECK(ok32);
  CHECK(lead32 == exp_of({5, 3, 3, 1}));

  DyckPath flat{3, 1, 1, Partition{0, 0, 0}};
  auto [okf, leadf] = check_triangularity(flat);
  CHECK(okf);
  CHECK(leadf == 0);

  for (auto& d5 : enum_dyck_paths(5, 1, 1)) CHECK(check_triangularity(d5).first);
}

TEST_CASE("projection is an isomorphism on the small spans") {
  GradedSpan s2 = build_span(2, 1, 1);
  CHECK(phi_is_isomorphism(s2));
  GradedSpan s3 = build_span(3, 1, 1);
  CHECK(phi_is_isomorphism(s3));
  GradedSpan s12 = build_span(3, 1, 2);
  CHECK(phi_is_isomorphism(s12));
}

TEST_CASE("spanning-tree activity polynomials span the same space") {
  auto basis2 = external_activity_basis(2);
  CHECK(basis2.size() == 3);
  CHECK(rank_of(basis2, 3) == 3);

  auto basis3 = external_activity_basis(3);
  CHECK(basis3.size() == 16);
  CHECK(rank_of(basis3, 4) == 16);

  // adjoining them to the echelon basis does not grow the span
  GradedSpan s3 = build_span(3, 1, 1);
  std::vector<Polynomial> joint = all_row_polys(s3);
  for (auto& p : basis3) joint.push_back(p);
  CHECK(rank_of(joint, 4) == 16);
}

TEST_CASE("restricted degree characters match the path sums") {
  GradedSpan s = build_span(3, 2, 2);
  CHECK(s.dim() == 128);
  std::vector<ClassFunction> sums(s.pieces.size(), ClassFunction(3));
  for (auto& d : enum_dyck_paths(3, 2, 2)) {
    PathStats st = path_stats(d);
    sums[st.area] += coset_character(3, st.lambda);
  }
  for (int k = 0; k < static_cast<int>(s.pieces.size()); ++k)
    CHECK(degree_character(s, k, GroupSide::Sn) == sums[k]);
}
