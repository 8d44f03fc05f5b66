#pragma once

#include <string>

#include "ifam/family.hpp"

namespace ifam {

// Family files are JSON objects {"points": [labels...], "blocks": [[indices...]...]}.
// The writer always emits canonical form (sorted labels, strictly increasing
// members, blocks in lexicographic order); the reader accepts any order and
// canonicalizes, but rejects structural damage (ParseError) and semantic
// damage (ValidationError wrapping the family-construction codes).

std::string to_json_string(const SetFamily& f);
SetFamily family_from_json_string(const std::string& text);

void write_family(const SetFamily& f, const std::string& path);
SetFamily read_family(const std::string& path);

} // namespace ifam
