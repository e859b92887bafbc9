// Randomized and exhaustive cross-cutting properties, runnable on their own
// via the test-suite filter (-ts=properties).

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "parkspan/combinatorics.hpp"
#include "parkspan/multigraph.hpp"
#include "parkspan/symfunc.hpp"
#include "test_util.hpp"

using namespace parkspan;

TEST_SUITE_BEGIN("properties");

TEST_CASE("irreducible characters are orthonormal") {
  for (int n = 1; n <= 7; ++n) {
    const auto& parts = enum_partitions(n);
    for (size_t a = 0; a < parts.size(); ++a)
      for (size_t b = a; b < parts.size(); ++b)
        CHECK(inner_product(irreducible_character(n, parts[a]),
                            irreducible_character(n, parts[b])) == Rat(a == b ? 1 : 0));
  }
}

TEST_CASE("induction products multiply h-expansions") {
  std::mt19937 rng(20240601);
  auto random_partition = [&](int n) {
    const auto& parts = enum_partitions(n);
    return parts[std::uniform_int_distribution<size_t>(0, parts.size() - 1)(rng)];
  };
  for (int trial = 0; trial < 12; ++trial) {
    int a = std::uniform_int_distribution<int>(1, 5)(rng);
    int b = std::uniform_int_distribution<int>(1, std::min(7 - a, 5))(rng);
    Partition alpha = random_partition(a), beta = random_partition(b);

    ClassFunction prod =
        induction_product(coset_character(a, alpha), coset_character(b, beta));
    std::vector<int> parts;
    for (int p : alpha.parts) parts.push_back(p);
    for (int p : beta.parts) parts.push_back(p);
    std::sort(parts.rbegin(), parts.rend());
    // h_alpha * h_beta = h_{alpha union beta}
    CHECK(prod == coset_character(a + b, Partition(parts)));
    SymFunc h(a + b, Basis::h);
    h.add(Partition(parts), 1);
    CHECK(convert(frobenius(prod), Basis::h) == h);
  }

  // a column times a single box expands by adding one cell per column height
  ClassFunction pieri = induction_product(irreducible_character(2, Partition{1, 1}),
                                          irreducible_character(1, Partition{1}));
  CHECK(pieri == irreducible_character(3, Partition{2, 1}) +
                     irreducible_character(3, Partition{1, 1, 1}));
}

TEST_CASE("run partitions equal area multiplicities everywhere") {
  for (auto [ell, m] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}})
    for (int n = 1; n <= 6; ++n)
      for (auto& d : enum_dyck_paths(n, ell, m))
        CHECK(path_stats(d).lambda == mult_partition(d.mu));
}

TEST_CASE("labeled paths biject with preference sequences") {
  for (int n = 1; n <= 6; ++n) {
    auto labeled = enum_labeled_paths(n);
    CHECK(Int(static_cast<long>(labeled.size())) == ipow(Int(n + 1), n - 1));
    std::set<ParkingFunction> images;
    for (auto& lp : labeled) {
      ParkingFunction a = parking_from_labeled(lp);
      CHECK(is_parking_function(a));
      images.insert(a);
    }
    CHECK(images.size() == labeled.size());
    CHECK(images.size() == enum_parking_functions(n).size());
  }
}

TEST_CASE("cyclic induction restricts to the regular character") {
  for (int n = 1; n <= 7; ++n)
    CHECK(restrict_character(lie_character(n), n) == regular_character(n));
}

TEST_CASE("deletion-contraction equals the rank expansion") {
  std::mt19937 rng(20240602);
  std::vector<Multigraph> graphs = {Multigraph::complete(3), Multigraph::complete(4)};
  {
    Multigraph k3m;
    k3m.v = 3;
    k3m.add_edge(1, 2, 2);
    k3m.add_edge(1, 3);
    k3m.add_edge(2, 3);
    graphs.push_back(k3m);
    Multigraph c4;
    c4.v = 4;
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 4);
    c4.add_edge(1, 4);
    graphs.push_back(c4);
  }
  for (int t = 0; t < 6; ++t) graphs.push_back(testutil::random_full_support(rng, 4, 2));
  for (auto& g : graphs) CHECK(tutte(g) == testutil::whitney_tutte(g));
}

TEST_SUITE_END();
