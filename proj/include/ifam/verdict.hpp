#pragma once

#include <string>
#include <vector>

#include "ifam/family.hpp"

namespace ifam {

// Outcome of a decidable property check. `witness` carries zero, one or two
// point sets (as label lists) explaining a failure — e.g. a disjoint pair of
// blocks, or a blocking set that is too small.
struct PropertyVerdict {
  std::string property;
  bool holds = false;
  std::vector<std::vector<Label>> witness;
  std::string detail;
};

} // namespace ifam
