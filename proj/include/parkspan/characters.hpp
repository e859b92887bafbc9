#pragma once

#include <map>
#include <string>
#include <vector>

#include "parkspan/partition.hpp"

namespace parkspan {

// Conjugacy classes of S_n: cycle types in the canonical (ascending grevlex)
// order, with class sizes and centralizer orders.  Index 0 is always (1^n).
struct ClassIndex {
  int n = 0;
  std::vector<Partition> types;  // positive parts
  std::vector<Int> sizes;
  std::vector<Int> zs;  // z(tau) = prod i^{m_i} m_i!

  int index_of(const Partition& tau) const;  // by stripped form; throws if absent
  static const ClassIndex& get(int n);
};

Int z_of(const Partition& tau);
Int class_size(int n, const Partition& tau);

// Exact class function on S_n, values aligned with ClassIndex::get(n).types.
struct ClassFunction {
  int n = 0;
  std::vector<Rat> v;

  ClassFunction() = default;
  explicit ClassFunction(int n_);

  const Rat& at(const Partition& tau) const;
  Rat& at(const Partition& tau);
  Rat dim() const { return v.at(0); }
  bool integral() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  ClassFunction operator*(const ClassFunction& o) const;  // pointwise (tensor product)
  ClassFunction& scale(const Rat& c);
  bool operator==(const ClassFunction&) const = default;
};

Rat inner_product(const ClassFunction& a, const ClassFunction& b);

// Irreducible character chi^lambda by the Murnaghan-Nakayama rule (memoized).
ClassFunction irreducible_character(int n, const Partition& lambda);

// Character of the coset module M^lambda = Ind_{S_lambda}^{S_n} 1: the number
// of ordered set partitions with block sizes lambda fixed by the class.
ClassFunction coset_character(int n, const Partition& lambda);

// trivial | sign | reflection | regular on S_n; "lie" returns the induced
// cyclic character, which lives on S_{n+1}.
ClassFunction named_character(const std::string& name, int n);
ClassFunction trivial_character(int n);
ClassFunction sign_character(int n);
ClassFunction reflection_character(int n);
ClassFunction regular_character(int n);
ClassFunction lie_character(int n);  // character of S_{n+1}

// Induction product: chi on S_a, psi on S_b -> Ind to S_{a+b} of the outer
// tensor, via cycle-type splittings weighted by centralizer orders.
ClassFunction induction_product(const ClassFunction& chi, const ClassFunction& psi);

// Restriction to S_n: value at tau is chi(tau union 1^{N-n}).
ClassFunction restrict_character(const ClassFunction& chi, int n);

// Character of Sym^k of the representation with character chi, by the Newton
// recurrence k*sym_k(g) = sum_i chi(g^i) sym_{k-i}(g).
ClassFunction sym_power(const ClassFunction& chi, int k);

// Cycle type of g^i for g of cycle type tau.
Partition power_cycle_type(const Partition& tau, long i);

// Character of S_n acting on parking functions, by counting preference lists
// fixed by each class (values constant on cycles).
ClassFunction park_character_direct(int n);

}  // namespace parkspan
