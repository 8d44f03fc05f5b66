#pragma once

#include <cstdint>

#include "ifam/family.hpp"
#include "ifam/verdict.hpp"

namespace ifam {

// Exact cover-number machinery. tau(f) is the minimum size of a set of points
// meeting every block; transversals(f) enumerates *all* minimum blocking sets
// and packages them as a family (its universe is the set of points the
// transversals actually use, which is always a subset of f's points).

struct TransversalReport {
  std::size_t tau = 0;
  SetFamily transversals;
};

bool is_blocking(Mask candidate, const SetFamily& f);
bool is_blocking(const std::vector<Label>& points, const SetFamily& f);

std::size_t tau(const SetFamily& f);
TransversalReport transversals(const SetFamily& f);

// Every blocking set of size exactly s, in canonical order. Exhaustive over
// all s-subsets of the universe with bitmask pruning.
std::vector<Mask> blocking_set_masks_of_size(const SetFamily& f, std::size_t s);
SetFamily blocking_sets_of_size(const SetFamily& f, std::size_t s);

// |f| against the k^k ceiling for uniform intersecting k-families with full
// cover number. Pass/fail verdict with both numbers in the detail.
PropertyVerdict check_upper_bound(const SetFamily& f);

// Worker cap for the exhaustive subset sweeps (default 1 = sequential).
// Results are byte-identical for any cap.
void set_thread_cap(unsigned n);
unsigned thread_cap();

} // namespace ifam
