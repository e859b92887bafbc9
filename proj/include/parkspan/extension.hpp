#pragma once

#include <map>
#include <vector>

#include "parkspan/characters.hpp"
#include "parkspan/partition.hpp"

namespace parkspan {

// Decide whether a character of S_n arises by restriction from S_N, either as
// a nonnegative integer combination of restricted irreducibles or (separately)
// of restricted Young permutation characters.

inline constexpr long long kDefaultNodeBudget = 100000000LL;
inline constexpr int kMaxBigGroup = 11;

enum class Verdict { Feasible, Infeasible, Inconclusive };

struct FeasibilityResult {
  Verdict verdict = Verdict::Inconclusive;
  std::map<Partition, long> witness;  // populated iff verdict == Feasible
  long long nodes_explored = 0;
  bool feasible() const { return verdict == Verdict::Feasible; }
};

struct RestrictionMatrix {
  int N = 0, n = 0;
  std::vector<Partition> rows;          // partitions of N
  std::vector<Partition> cols;          // partitions of n
  std::vector<std::vector<long>> B;     // B[row][col] = <Res chi^row, chi^col>
};

// Multiplicities of every irreducible of S_n inside Res(chi^lambda), lambda a
// partition of N.  Guard: 1 <= n <= N <= kMaxBigGroup.
RestrictionMatrix restriction_matrix(int N, int n);

// Multiplicities <chi, chi^mu> over mu in enum_partitions(chi.n) order.
// Throws std::invalid_argument unless all are nonnegative integers.
std::vector<long> irreducible_multiplicities(const ClassFunction& chi);

// Is chi the restriction of a genuine S_N representation?  Exhaustive DFS, so
// Infeasible is a proof; exceeding the node budget yields Inconclusive.
FeasibilityResult extends_to(const ClassFunction& chi, int N,
                             long long node_budget = kDefaultNodeBudget);

// Coordinates of chi in the Young permutation character basis (may be
// negative; throws if non-integral, i.e. chi is not a virtual character).
std::map<Partition, Int> m_basis_decomposition(const ClassFunction& chi);

// Restriction of the Young permutation character of S_N indexed by lam down
// to S_{N-1}: one summand per part occurrence, with that part lowered by one.
std::map<Partition, long> coset_restriction_step(const Partition& lam);

// Multiplicity vector of Res_{S_n} M^lam in the M-basis of S_n.
std::map<Partition, long> coset_restriction(const Partition& lam, int n);

// Is the target (given in the M-basis of S_n) a nonnegative integer
// combination of restricted Young permutation characters of S_N?
FeasibilityResult extends_as_coset_sum(const std::map<Partition, Int>& target,
                                       int n, int N,
                                       long long node_budget = kDefaultNodeBudget);

// True iff lam (a partition of n) is an a-by-b rectangle with ab = n+1 minus
// its inner corner.
bool near_rectangle(const Partition& lam);

}  // namespace parkspan
