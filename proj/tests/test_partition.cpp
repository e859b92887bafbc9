#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "parkspan/partition.hpp"

using namespace parkspan;

TEST_CASE("partition basics") {
  Partition p{5, 3, 1, 0};
  CHECK(p.size() == 9);
  CHECK(p.length() == 4);
  CHECK(p.positive_count() == 3);
  CHECK(p.valid());
  CHECK(p.stripped() == Partition{5, 3, 1});
  CHECK(p.padded(6) == Partition{5, 3, 1, 0, 0, 0});
  CHECK(p.str() == "5,3,1,0");
  CHECK(Partition{}.str() == "");
  CHECK_FALSE(Partition{1, 2}.valid());
  CHECK_FALSE(Partition{1, -1}.valid());
  CHECK_THROWS_AS((void)Partition({2, 1}).padded(1), std::invalid_argument);
}

TEST_CASE("multiplicity partition counts zero parts") {
  CHECK(mult_partition(Partition{4, 4, 3, 3, 3, 1, 0, 0}) == Partition{3, 2, 2, 1});
  CHECK(mult_partition(Partition{0, 0, 0}) == Partition{3});
  CHECK(mult_partition(Partition{2, 1}) == Partition{1, 1});
  CHECK(mult_partition(Partition{}) == Partition{});
  // a length-n input always yields a partition of n
  for (auto& lam : partitions_under({3, 2, 1, 0})) {
    Partition m = mult_partition(lam);
    CHECK(m.valid());
    CHECK(m.size() == lam.length());
  }
}

TEST_CASE("young containment") {
  CHECK(young_contains(Partition{3, 2}, Partition{2, 2}));
  CHECK(young_contains(Partition{3, 2}, Partition{3}));
  CHECK_FALSE(young_contains(Partition{3, 2}, Partition{2, 2, 1}));
  CHECK_FALSE(young_contains(Partition{3, 2}, Partition{4}));
  CHECK(young_contains(Partition{3, 2}, Partition{}));
}

TEST_CASE("graded reverse lexicographic comparison") {
  // smaller size always comes first
  CHECK(grevlex_less(Partition{1, 1, 0}, Partition{3, 1, 0}));
  // equal size: last nonzero entry of the difference decides
  CHECK(grevlex_less(Partition{2, 1, 1}, Partition{2, 2, 0}));
  CHECK(grevlex_less(Partition{2, 2, 0}, Partition{3, 1, 0}));
  CHECK_FALSE(grevlex_less(Partition{3, 1, 0}, Partition{2, 2, 0}));
  CHECK_FALSE(grevlex_less(Partition{2, 2}, Partition{2, 2}));
  CHECK_THROWS_AS((void)grevlex_less(Partition{2, 1}, Partition{2, 1, 0}),
                  std::invalid_argument);

  CHECK(grevlex_cmp_vec({1, 2, 0}, {0, 1, 2}) == 1);
  CHECK(grevlex_cmp_vec({1, 1}, {1, 1}) == 0);
  CHECK(grevlex_cmp_vec({2, 0}, {1, 2}) == -1);
}

TEST_CASE("grevlex is a strict total order (random triples)") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> d(0, 4);
  auto random_partition = [&] {
    std::vector<int> v(5);
    for (int& x : v) x = d(rng);
    std::sort(v.rbegin(), v.rend());
    return Partition(v);
  };
  for (int t = 0; t < 400; ++t) {
    Partition a = random_partition(), b = random_partition(), c = random_partition();
    int rel = (a == b) + grevlex_less(a, b) + grevlex_less(b, a);
    CHECK(rel == 1);  // trichotomy
    if (grevlex_less(a, b) && grevlex_less(b, c)) CHECK(grevlex_less(a, c));
    CHECK_FALSE(grevlex_less(a, a));
  }
}

TEST_CASE("containment and grevlex both bound the size") {
  auto box = partitions_under({3, 3, 3});
  for (auto& lam : box)
    for (auto& mu : box) {
      if (young_contains(mu, lam) && lam.size() < mu.size())
        CHECK_FALSE(grevlex_less(mu, lam));
      if (grevlex_less(lam, mu)) CHECK(lam.size() <= mu.size());
      if (young_contains(mu, lam)) CHECK(lam.size() <= mu.size());
    }
}

TEST_CASE("partition enumeration") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n)
    CHECK(enum_partitions(n).size() == static_cast<size_t>(counts[n]));

  auto& p4 = enum_partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition{1, 1, 1, 1});
  CHECK(p4[1] == Partition{2, 1, 1});
  CHECK(p4[2] == Partition{2, 2});
  CHECK(p4[3] == Partition{3, 1});
  CHECK(p4[4] == Partition{4});
  for (size_t i = 0; i + 1 < p4.size(); ++i)
    CHECK(grevlex_less(p4[i].padded(4), p4[i + 1].padded(4)));
}

TEST_CASE("partitions under a bound") {
  auto under = partitions_under({2, 1});
  REQUIRE(under.size() == 5);
  CHECK(under[0] == Partition{0, 0});
  CHECK(under[4] == Partition{2, 1});
  for (auto& lam : under) {
    CHECK(lam.length() == 2);
    CHECK(lam.valid());
    CHECK(young_contains(Partition{2, 1}, lam.stripped()));
  }
  for (size_t i = 0; i + 1 < under.size(); ++i)
    CHECK(grevlex_less(under[i], under[i + 1]));

  // brute-force count oracle over the full exponent box
  auto count_in_box = [](std::vector<int> bound) {
    int total = 0;
    std::vector<int> v(bound.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == bound.size()) {
        for (size_t j = 0; j + 1 < v.size(); ++j)
          if (v[j] < v[j + 1]) return;
        ++total;
        return;
      }
      for (v[i] = 0; v[i] <= bound[i]; ++v[i]) rec(i + 1);
      v[i] = 0;
    };
    rec(0);
    return total;
  };
  std::vector<std::vector<int>> bounds = {{2, 1}, {3, 2, 1}, {4, 2, 2, 1}, {2, 2, 2}};
  for (auto& b : bounds)
    CHECK(partitions_under(b).size() == static_cast<size_t>(count_in_box(b)));
}
