#include <random>

#include "doctest.h"
#include "parkspan/symfunc.hpp"

using namespace parkspan;

namespace {

SymFunc sf(int n, Basis b, std::initializer_list<std::pair<std::vector<int>, long>> terms) {
  SymFunc f(n, b);
  for (auto& [parts, c] : terms) f.add(Partition(parts), c);
  return f;
}

}  // namespace

TEST_CASE("Kostka numbers") {
  CHECK(kostka(3, Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(kostka(3, Partition{2, 1}, Partition{2, 1}) == 1);
  CHECK(kostka(3, Partition{3}, Partition{1, 1, 1}) == 1);
  CHECK(kostka(4, Partition{2, 2}, Partition{1, 1, 1, 1}) == 2);
  CHECK(kostka(4, Partition{2, 2}, Partition{2, 1, 1}) == 1);
  CHECK(kostka(4, Partition{3, 1}, Partition{1, 1, 1, 1}) == 3);
  // zero unless the row partition dominates the column partition
  CHECK(kostka(4, Partition{2, 2}, Partition{3, 1}) == 0);
  CHECK(kostka(4, Partition{1, 1, 1, 1}, Partition{2, 2}) == 0);
  // unitriangular diagonal
  for (auto& lam : enum_partitions(5)) CHECK(kostka(5, lam, lam) == 1);
}

TEST_CASE("Frobenius images of basic characters") {
  CHECK(frobenius(trivial_character(4)) == sf(4, Basis::s, {{{4}, 1}}));
  CHECK(frobenius(sign_character(4)) == sf(4, Basis::s, {{{1, 1, 1, 1}, 1}}));
  CHECK(frobenius(irreducible_character(4, Partition{2, 2})) ==
        sf(4, Basis::s, {{{2, 2}, 1}}));
  CHECK(frobenius(reflection_character(5)) == sf(5, Basis::s, {{{4, 1}, 1}}));
  // non-virtual input is rejected
  ClassFunction half = trivial_character(3);
  half.scale(Rat(1, 2));
  CHECK_THROWS(frobenius(half));
}

TEST_CASE("basis conversion on known expansions") {
  CHECK(convert(sf(3, Basis::h, {{{2, 1}, 1}}), Basis::s) ==
        sf(3, Basis::s, {{{3}, 1}, {{2, 1}, 1}}));
  CHECK(convert(sf(3, Basis::h, {{{1, 1, 1}, 1}}), Basis::s) ==
        sf(3, Basis::s, {{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}}));
  CHECK(convert(sf(3, Basis::s, {{{3}, 1}, {{2, 1}, 1}}), Basis::h) ==
        sf(3, Basis::h, {{{2, 1}, 1}}));
  // h_lambda is the Frobenius image of the permutation module
  for (int n = 1; n <= 5; ++n)
    for (auto& lam : enum_partitions(n)) {
      SymFunc h(n, Basis::h);
      h.add(lam, 1);
      CHECK(convert(h, Basis::s) == frobenius(coset_character(n, lam)));
    }
}

TEST_CASE("conversion round-trips exactly") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dc(-4, 4);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      SymFunc f(n, Basis::s);
      for (auto& lam : enum_partitions(n)) {
        int c = dc(rng);
        if (c) f.add(lam, c);
      }
      CHECK(convert(convert(f, Basis::h), Basis::s) == f);
      SymFunc g = f;
      g.basis = Basis::h;
      CHECK(convert(convert(g, Basis::s), Basis::h) == g);
    }
}

TEST_CASE("class function round-trip") {
  for (auto& lam : enum_partitions(4)) {
    CHECK(to_class_function(frobenius(coset_character(4, lam))) ==
          coset_character(4, lam));
    CHECK(to_class_function(frobenius(irreducible_character(4, lam))) ==
          irreducible_character(4, lam));
  }
}

TEST_CASE("direct h-basis constructor and printing") {
  std::map<Partition, Int> mults{{Partition{3}, 1}, {Partition{2, 1}, 3},
                                 {Partition{1, 1, 1}, 1}};
  SymFunc f = frob_h(3, mults);
  CHECK(f.basis == Basis::h);
  CHECK(f == sf(3, Basis::h, {{{3}, 1}, {{2, 1}, 3}, {{1, 1, 1}, 1}}));
  CHECK(f.str() == "h(3) + 3 h(2,1) + h(1,1,1)");
  CHECK(sf(4, Basis::s, {{{4}, 1}, {{3, 1}, 2}}).str() == "s(4) + 2 s(3,1)");
  CHECK(SymFunc(3, Basis::s).str() == "0");
}

TEST_CASE("parking-space tables") {
  SymFunc park3 = sf(3, Basis::h, {{{3}, 1}, {{2, 1}, 3}, {{1, 1, 1}, 1}});
  CHECK(convert(frobenius(park_character_direct(3)), Basis::h) == park3);

  GradedSymFunc g = park_grfrob(3, 1, 1);
  REQUIRE(g.pieces.size() == 4);
  CHECK(g.pieces[0] == sf(3, Basis::h, {{{3}, 1}}));
  CHECK(g.pieces[1] == sf(3, Basis::h, {{{2, 1}, 1}}));
  CHECK(g.pieces[2] == sf(3, Basis::h, {{{2, 1}, 2}}));
  CHECK(g.pieces[3] == sf(3, Basis::h, {{{1, 1, 1}, 1}}));
  CHECK(g.total() == park3);

  // the graded sum recovers the full parking character for n up to 6
  for (int n = 1; n <= 6; ++n)
    CHECK(to_class_function(convert(park_grfrob(n, 1, 1).total(), Basis::s)) ==
          park_character_direct(n));
}
