#include <random>
#include <stdexcept>

#include "doctest.h"
#include "parkspan/polynomial.hpp"

using namespace parkspan;

namespace {

Polynomial random_poly(std::mt19937& rng, int nvars, int nterms, int maxexp) {
  std::uniform_int_distribution<int> de(0, maxexp);
  std::uniform_int_distribution<int> dc(-5, 5);
  Polynomial p(nvars);
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> ev(nvars);
    for (int& e : ev) e = de(rng);
    p.terms.emplace_back(exp_of(ev), Int(dc(rng)));
  }
  p.sort_combine();
  return p;
}

}  // namespace

TEST_CASE("packed exponent vectors") {
  Exp e = exp_of({1, 2, 0, 3});
  CHECK(exp_get(e, 1) == 1);
  CHECK(exp_get(e, 2) == 2);
  CHECK(exp_get(e, 3) == 0);
  CHECK(exp_get(e, 4) == 3);
  CHECK(total_degree(e) == 6);
  CHECK(exp_mul(exp_of({1, 2}), exp_of({3, 4})) == exp_of({4, 6}));
  CHECK_THROWS_AS(exp_mul(exp_of({255}), exp_of({1})), std::overflow_error);
  CHECK_THROWS_AS(exp_of({-1}), std::invalid_argument);
  CHECK_THROWS_AS(exp_of({256}), std::invalid_argument);
  CHECK(exponent_partition(exp_of({1, 3, 2, 5}), 3) == Partition{3, 2, 1});

  // permutation acts by relabeling variables
  CHECK(exp_permute(exp_of({1, 2, 3}), {2, 3, 1}) == exp_of({3, 1, 2}));
}

TEST_CASE("graded reverse lexicographic monomial order") {
  int nv = 3;
  // higher total degree wins
  CHECK(grevlex_cmp(exp_of({2, 0, 0}), exp_of({1, 1, 1}), nv) == -1);
  // same degree: smaller exponent at the last differing variable wins
  CHECK(grevlex_cmp(exp_of({1, 0, 0}), exp_of({0, 1, 0}), nv) == 1);   // x1 > x2
  CHECK(grevlex_cmp(exp_of({0, 1, 0}), exp_of({0, 0, 1}), nv) == 1);   // x2 > x3
  CHECK(grevlex_cmp(exp_of({2, 0, 0}), exp_of({1, 1, 0}), nv) == 1);   // x1^2 > x1x2
  CHECK(grevlex_cmp(exp_of({1, 1, 0}), exp_of({2, 0, 0}), nv) == -1);
  CHECK(grevlex_cmp(exp_of({1, 1, 0}), exp_of({1, 1, 0}), nv) == 0);
}

TEST_CASE("polynomial construction and printing") {
  Polynomial xy = Polynomial::edge(3, 1, 2);
  CHECK(xy.str() == "x1 - x2");
  CHECK(xy.degree() == 1);
  CHECK(xy.homogeneous());
  CHECK_THROWS_AS(Polynomial::edge(3, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::edge(3, 1, 4), std::invalid_argument);
  CHECK(Polynomial::constant(2, 0).zero());
  CHECK(Polynomial::constant(2, 7).str() == "7");
  CHECK_THROWS_AS(Polynomial(9), std::invalid_argument);

  Polynomial prod = Polynomial::edge(3, 1, 2) * Polynomial::edge(3, 1, 3);
  CHECK(prod.str() == "x1^2 - x1x2 - x1x3 + x2x3");
  CHECK(prod.coefficient_of(exp_of({2, 0, 0})) == 1);
  CHECK(prod.coefficient_of(exp_of({1, 1, 0})) == -1);
  CHECK(prod.coefficient_of(exp_of({0, 1, 1})) == 1);
  CHECK(prod.coefficient_of(exp_of({0, 2, 0})) == 0);
  CHECK(prod.homogeneous());
  CHECK(prod.degree() == 2);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(424242);
  for (int t = 0; t < 25; ++t) {
    Polynomial p = random_poly(rng, 4, 6, 3);
    Polynomial q = random_poly(rng, 4, 6, 3);
    Polynomial r = random_poly(rng, 4, 4, 2);
    CHECK((p + q) - q == p);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p - p).zero());
  }
}

TEST_CASE("variable permutation and substitution") {
  Polynomial e12 = Polynomial::edge(4, 1, 2);
  CHECK(e12.permuted({2, 1, 3, 4}) == -e12);
  CHECK(e12.permuted({3, 2, 1, 4}) == -Polynomial::edge(4, 2, 3));  // x3 - x2

  std::mt19937 rng(99);
  std::vector<int> w{3, 1, 4, 2}, winv(4);
  for (int v = 1; v <= 4; ++v) winv[w[v - 1] - 1] = v;
  for (int t = 0; t < 10; ++t) {
    Polynomial p = random_poly(rng, 4, 8, 3);
    Polynomial q = random_poly(rng, 4, 8, 3);
    CHECK(p.permuted(w).permuted(winv) == p);
    CHECK((p * q).permuted(w) == p.permuted(w) * q.permuted(w));
  }

  Polynomial prod = Polynomial::edge(3, 1, 3) * Polynomial::edge(3, 2, 3);
  Polynomial sub = prod.with_var_zero(3);
  CHECK(sub.str() == "x1x2");
}

TEST_CASE("products of edge binomials") {
  std::vector<std::tuple<int, int, int>> edges{{1, 2, 1}, {1, 3, 1}};
  CHECK(graph_weight(edges, 3) ==
        Polynomial::edge(3, 1, 2) * Polynomial::edge(3, 1, 3));
  CHECK(graph_weight({}, 3) == Polynomial::constant(3, 1));
  CHECK(graph_weight({{1, 2, 0}}, 2) == Polynomial::constant(2, 1));

  // binomial expansion of a high power, exact in big integers
  Polynomial pw = graph_weight({{1, 2, 70}}, 2);
  CHECK(pw.terms.size() == 71);
  CHECK(pw.coefficient_of(exp_of({35, 35})) == -binomial(70, 35));
  CHECK(pw.coefficient_of(exp_of({70, 0})) == 1);

  // the machine-word fast path reports overflow instead of wrapping
  CHECK_THROWS_AS(graph_weight_t<long long>({{1, 2, 70}}, 2), ArithmeticOverflow);
  TPoly<long long> ok = graph_weight_t<long long>({{1, 2, 5}, {1, 3, 2}}, 3);
  CHECK(ok.coefficient_of(exp_of({5, 0, 2})) == 1);
  CHECK(ok.coefficient_of(exp_of({4, 1, 2})) == -5);
}
