#pragma once

#include <optional>
#include <utility>

#include "ifam/family.hpp"

namespace ifam {

// Point degrees collapsed to (degree, number of points with that degree),
// sorted by descending degree.
using DegreeProfile = std::vector<std::pair<std::size_t, std::size_t>>;

DegreeProfile degree_profile(const SetFamily& f);
std::string profile_to_string(const DegreeProfile& p);

struct IsoResult {
  bool isomorphic = false;
  // label-to-label bijection transporting blocks onto blocks; present iff
  // isomorphic, and always re-verified before being returned
  std::optional<std::vector<std::pair<Label, Label>>> mapping;
  // which cheap invariant separated the two families, when one did
  std::optional<std::string> separating_invariant;
  std::string detail;
};

// Complete decision procedure: invariant screens (point count, block count,
// uniformity, degree profile, pairwise intersection-size distribution)
// followed by exhaustive backtracking over degree-compatible point maps.
// Families over more than 32 points are refused with BudgetExceeded.
IsoResult are_isomorphic(const SetFamily& f, const SetFamily& g);

// Independent checker: `mapping` is a bijection from f's labels to g's
// labels carrying the block set of f exactly onto the block set of g.
bool verify_isomorphism(const SetFamily& f, const SetFamily& g,
                        const std::vector<std::pair<Label, Label>>& mapping);

} // namespace ifam
