#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ifam {

// One line of the reproduction table: a quantity the library recomputes from
// scratch, together with its expected value. `provenance` distinguishes
// values quoted from the source material ("published"), values derivable
// from it by computation ("derived"), and bookkeeping identities
// ("definition"). The CLI exits nonzero exactly when a published value
// fails to match.
struct ReproItem {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  std::string provenance;
  std::string note;
  bool match = false;
};

// Evaluate the whole table, or only the item with the given id. The stress
// item ("stress.extend75") runs only when requested by id explicitly.
std::vector<ReproItem> run_repro(const std::string& only_id = "");

} // namespace ifam
