#pragma once

#include <cstddef>
#include <vector>

#include "ifam/family.hpp"

namespace ifam {

// The cyclic part structure behind the circular generators: t parts
// X_0..X_{t-1} whose sizes depend only on k, t. Labels are "X<n>:<i>".
struct CyclePartition {
  std::size_t k = 0;
  std::size_t t = 0;
  std::vector<std::vector<Label>> parts;

  std::vector<Label> all_labels() const;
  std::size_t total_points() const;
};

CyclePartition cycle_partition(std::size_t k, std::size_t t);

// Sparse circular family: from each base part X_n, the tail indices follow a
// monotone 0/1-increment walk through the next k-|X_n| parts. Uniform of
// size k, cover number t for 1 <= t <= k.
SetFamily circular_F(std::size_t k, std::size_t t);

// Dense circular family: from each base part X_n, every way of picking one
// point from each of the next k-|X_n| parts. Contains circular_F(k,t).
SetFamily circular_G(std::size_t k, std::size_t t);

// All sets choosing exactly one point from every part; this is the claimed
// family of minimum blocking sets of circular_G(k,t).
SetFamily one_per_part_family(const CyclePartition& cp);

// All k-subsets of a (k+t-1)-point universe. Closed with cover number t for
// 1 <= t <= k-1.
SetFamily complete_cif(std::size_t k, std::size_t t);

// All k-subsets of a (k+t-2)-point core P, plus one block {x_C} ∪ (P \ C)
// for every (t-1)-subset C of P, each with its own fresh symbol point x_C.
// Closed with cover number t for 2 <= t <= k-1.
SetFamily pointed_cif(std::size_t k, std::size_t t);

// The two tiny maximal families used as composition seeds.
SetFamily mif_singleton(); // one block {a}
SetFamily mif_triangle();  // the three 2-subsets of {a,b,c}

// Affine plane of prime order n: n^2 points, n^2+n lines of n points, and
// n+1 parallel classes of n mutually disjoint lines (given as indices into
// lines.blocks()). Non-prime orders are rejected with UnsupportedOrder.
struct AffinePlane {
  std::size_t order = 0;
  SetFamily lines;
  std::vector<std::vector<std::size_t>> classes;
};

AffinePlane affine_plane(std::size_t n);

} // namespace ifam
