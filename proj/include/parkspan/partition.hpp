#pragma once

#include <string>
#include <vector>

#include "parkspan/numeric.hpp"

namespace parkspan {

// Weakly decreasing vector of nonnegative ints.  Stored zeros are significant:
// a partition "of declared length n" keeps its zero parts, and functions that
// depend on length (grevlex comparison, mult) honor them.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) {}
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

  int length() const { return static_cast<int>(parts.size()); }
  int size() const;             // sum of parts
  int positive_count() const;   // number of nonzero parts
  bool valid() const;           // weakly decreasing, nonnegative

  Partition stripped() const;   // drop trailing zeros
  Partition padded(int len) const;  // append zeros up to len (error if shorter)

  bool operator==(const Partition&) const = default;
  // lexicographic on the stored vector; used only as a container key
  bool operator<(const Partition& o) const { return parts < o.parts; }

  std::string str() const;      // "5,3,1" / "0,0" / "" for empty
};

// Multiplicities of the distinct part values, sorted decreasingly.  Zero parts
// count like any other value: mult (4,4,3,3,3,1,0,0) = (3,2,2,1) and
// mult (0,0,0) = (3).  For a length-n input the result is a partition of n.
Partition mult_partition(const Partition& lam);

// Young containment: inner_i <= outer_i for every row of inner.
bool young_contains(const Partition& outer, const Partition& inner);

// Graded reverse lexicographic: lam < mu iff |lam| < |mu|, or sizes are equal
// and the last nonzero entry of lam - mu is positive.  Requires equal stored
// lengths (throws std::invalid_argument otherwise).
bool grevlex_less(const Partition& lam, const Partition& mu);

// Same order on raw exponent vectors of equal length (no monotonicity
// requirement); -1 / 0 / +1.
int grevlex_cmp_vec(const std::vector<int>& a, const std::vector<int>& b);

// All partitions of n with positive parts, ascending grevlex (padded to
// length n for the comparison): (1^n) first, (n) last.
const std::vector<Partition>& enum_partitions(int n);

// Partitions (allowing fewer parts) that fit inside the given staircase
// bounds: result[i] <= bound[i], declared length = bound.size().  Ascending
// grevlex order.
std::vector<Partition> partitions_under(const std::vector<int>& bound);

}  // namespace parkspan
