#pragma once

#include <map>
#include <string>
#include <vector>

#include "parkspan/characters.hpp"

namespace parkspan {

enum class Basis { s, h };

// Homogeneous symmetric function of degree n with integer coefficients in a
// fixed basis; keys are stripped partitions of n.
struct SymFunc {
  int n = 0;
  Basis basis = Basis::s;
  std::map<Partition, Int> coeffs;

  SymFunc() = default;
  SymFunc(int n_, Basis b) : n(n_), basis(b) {}

  void add(const Partition& lam, const Int& c);
  bool operator==(const SymFunc&) const = default;
  std::string str() const;  // e.g. "s(4) + 2 s(3,1)"; terms in descending grevlex
};

// Kostka number K_{mu,lambda} = <M^lambda, chi^mu> (cached per n).
Int kostka(int n, const Partition& mu, const Partition& lambda);

// Frobenius image of a character in the Schur basis; every multiplicity
// <chi, chi^mu> must be an integer (throws otherwise: the input was not a
// virtual character).
SymFunc frobenius(const ClassFunction& chi);

// Build sum of c_lambda h_lambda directly from coset multiplicities.
SymFunc frob_h(int n, const std::map<Partition, Int>& coset_mults);

// Basis conversion (exact; h->s by Kostka expansion, s->h by unitriangular
// back-substitution in ascending grevlex order).
SymFunc convert(const SymFunc& f, Basis target);

// Character whose Frobenius image is f.
ClassFunction to_class_function(const SymFunc& f);

// Graded symmetric function: pieces[k] is the degree-q^k coefficient.
struct GradedSymFunc {
  int n = 0;
  Basis basis = Basis::s;
  std::vector<SymFunc> pieces;

  SymFunc total() const;
  bool operator==(const GradedSymFunc&) const = default;
  std::string str() const;  // one line per degree
};

// Graded Frobenius of the parking space for (l, m): degree k collects
// h_{lambda(D)} over paths with area k.
GradedSymFunc park_grfrob(int n, int ell, int m);

}  // namespace parkspan
