#include "ifam/family.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ifam {

const char* to_string(Err code) {
  switch (code) {
    case Err::DuplicateBlock: return "DuplicateBlock";
    case Err::DuplicateLabel: return "DuplicateLabel";
    case Err::EmptyBlock: return "EmptyBlock";
    case Err::EmptyLabel: return "EmptyLabel";
    case Err::IsolatedPoint: return "IsolatedPoint";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::UniverseTooLarge: return "UniverseTooLarge";
    case Err::ParseError: return "ParseError";
    case Err::ValidationError: return "ValidationError";
    case Err::OverlappingUniverses: return "OverlappingUniverses";
    case Err::NotUniform: return "NotUniform";
    case Err::NotIntersecting: return "NotIntersecting";
    case Err::TauTooLarge: return "TauTooLarge";
    case Err::CharacterizationMismatch: return "CharacterizationMismatch";
    case Err::InvalidParams: return "InvalidParams";
    case Err::UnsupportedOrder: return "UnsupportedOrder";
    case Err::NotCif: return "NotCif";
    case Err::NotMif: return "NotMif";
    case Err::SizeMismatch: return "SizeMismatch";
    case Err::BadPartition: return "BadPartition";
    case Err::TooManyClasses: return "TooManyClasses";
    case Err::ConditionAFailed: return "ConditionAFailed";
    case Err::ConditionBFailed: return "ConditionBFailed";
    case Err::ConditionCFailed: return "ConditionCFailed";
    case Err::TauMismatch: return "TauMismatch";
    case Err::NonUniformFactors: return "NonUniformFactors";
    case Err::DualTauMismatch: return "DualTauMismatch";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::DualTauTooSmall: return "DualTauTooSmall";
    case Err::ReconstructionMismatch: return "ReconstructionMismatch";
    case Err::VerificationFailed: return "VerificationFailed";
    case Err::BudgetExceeded: return "BudgetExceeded";
  }
  return "UnknownError";
}

std::optional<PointId> SetFamily::index_of(const Label& l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it != labels_.end() && *it == l)
    return static_cast<PointId>(it - labels_.begin());
  return std::nullopt;
}

std::vector<Label> SetFamily::block_labels(std::size_t i) const { return labels_of(blocks_[i]); }

std::vector<Label> SetFamily::labels_of(Mask m) const {
  std::vector<Label> out;
  for (std::size_t p : m.members()) out.push_back(labels_[p]);
  return out;
}

Mask SetFamily::universe_mask() const {
  Mask m;
  for (std::size_t i = 0; i < labels_.size(); ++i) m.set(i);
  return m;
}

bool SetFamily::has_block(Mask m) const {
  return std::binary_search(blocks_.begin(), blocks_.end(), m, MaskLexLess{});
}

namespace {

std::string describe_block(const std::vector<Label>& labels, Mask m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t p : m.members()) {
    if (!first) os << ",";
    os << labels[p];
    first = false;
  }
  os << "}";
  return os.str();
}

} // namespace

namespace detail {

// Shared canonicalization: sorts/uniques labels, remaps block members, sorts
// blocks lexicographically, rejects duplicates and isolated points.
SetFamily build_family(std::vector<Label> labels, std::vector<Mask> raw_blocks,
                       bool universe_is_exact) {
  if (labels.size() > Mask::capacity)
    throw Error(Err::UniverseTooLarge,
                "universe has " + std::to_string(labels.size()) + " points, limit is " +
                    std::to_string(Mask::capacity));
  for (const Label& l : labels)
    if (l.empty()) throw Error(Err::EmptyLabel, "labels must be nonempty strings");

  // Sort labels, remember where each old position went.
  std::vector<std::size_t> order(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  std::vector<Label> sorted;
  sorted.reserve(labels.size());
  std::vector<std::size_t> new_pos(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted.push_back(labels[order[i]]);
    new_pos[order[i]] = i;
  }
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      throw Error(Err::DuplicateLabel, "label \"" + sorted[i] + "\" appears twice");

  std::vector<Mask> blocks;
  blocks.reserve(raw_blocks.size());
  for (const Mask& rb : raw_blocks) {
    Mask nb;
    for (std::size_t p : rb.members()) nb.set(new_pos[p]);
    blocks.push_back(nb);
  }
  std::sort(blocks.begin(), blocks.end(), MaskLexLess{});
  for (std::size_t i = 1; i < blocks.size(); ++i)
    if (blocks[i] == blocks[i - 1])
      throw Error(Err::DuplicateBlock, "block " + describe_block(sorted, blocks[i]) +
                                           " appears twice");

  if (universe_is_exact) {
    Mask used;
    for (const Mask& b : blocks) used |= b;
    for (std::size_t p = 0; p < sorted.size(); ++p)
      if (!used.test(p))
        throw Error(Err::IsolatedPoint, "point \"" + sorted[p] + "\" lies in no block");
  }

  SetFamily f;
  f.labels_ = std::move(sorted);
  f.blocks_ = std::move(blocks);
  if (!f.blocks_.empty()) {
    std::size_t k = f.blocks_.front().count();
    bool uniform = std::all_of(f.blocks_.begin(), f.blocks_.end(),
                               [&](const Mask& b) { return b.count() == k; });
    if (uniform) f.uniform_k_ = k;
  }
  return f;
}

} // namespace detail

SetFamily make_family(std::vector<Label> labels,
                      const std::vector<std::vector<PointId>>& blocks) {
  std::vector<Mask> masks;
  masks.reserve(blocks.size());
  for (const auto& b : blocks) {
    if (b.empty()) throw Error(Err::EmptyBlock, "blocks must be nonempty");
    Mask m;
    for (PointId p : b) {
      if (p >= labels.size())
        throw Error(Err::IndexOutOfRange, "point index " + std::to_string(p) +
                                              " outside universe of size " +
                                              std::to_string(labels.size()));
      m.set(p);
    }
    masks.push_back(m);
  }
  return detail::build_family(std::move(labels), std::move(masks), /*universe_is_exact=*/true);
}

SetFamily family_from_label_blocks(const std::vector<std::vector<Label>>& blocks) {
  std::set<Label> universe;
  for (const auto& b : blocks) {
    if (b.empty()) throw Error(Err::EmptyBlock, "blocks must be nonempty");
    universe.insert(b.begin(), b.end());
  }
  std::vector<Label> labels(universe.begin(), universe.end());
  std::map<Label, std::size_t> pos;
  for (std::size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = i;
  if (labels.size() > Mask::capacity)
    throw Error(Err::UniverseTooLarge,
                "universe has " + std::to_string(labels.size()) + " points, limit is " +
                    std::to_string(Mask::capacity));
  std::vector<Mask> masks;
  masks.reserve(blocks.size());
  for (const auto& b : blocks) {
    Mask m;
    for (const Label& l : b) m.set(pos.at(l));
    masks.push_back(m);
  }
  return detail::build_family(std::move(labels), std::move(masks), /*universe_is_exact=*/true);
}

SetFamily subfamily(const SetFamily& f, const std::vector<std::size_t>& block_indices) {
  std::vector<std::vector<Label>> blocks;
  blocks.reserve(block_indices.size());
  for (std::size_t i : block_indices) {
    if (i >= f.size())
      throw Error(Err::IndexOutOfRange, "block index " + std::to_string(i) +
                                            " outside family of size " +
                                            std::to_string(f.size()));
    blocks.push_back(f.block_labels(i));
  }
  return family_from_label_blocks(blocks);
}

SetFamily prefix_labels(const SetFamily& f, const std::string& prefix) {
  std::vector<std::vector<Label>> blocks;
  blocks.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<Label> b;
    for (const Label& l : f.block_labels(i)) b.push_back(prefix + l);
    blocks.push_back(std::move(b));
  }
  return family_from_label_blocks(blocks);
}

bool universes_overlap(const SetFamily& f, const SetFamily& g) {
  // both label lists are sorted
  auto fi = f.labels().begin();
  auto gi = g.labels().begin();
  while (fi != f.labels().end() && gi != g.labels().end()) {
    if (*fi == *gi) return true;
    if (*fi < *gi) ++fi;
    else ++gi;
  }
  return false;
}

namespace {

void append_label_blocks(const SetFamily& f, const std::string& prefix,
                         std::vector<std::vector<Label>>& out) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<Label> b;
    for (const Label& l : f.block_labels(i)) b.push_back(prefix + l);
    out.push_back(std::move(b));
  }
}

} // namespace

SetFamily disjoint_union(const SetFamily& f, const SetFamily& g) {
  bool overlap = universes_overlap(f, g);
  std::vector<std::vector<Label>> blocks;
  blocks.reserve(f.size() + g.size());
  append_label_blocks(f, overlap ? "L:" : "", blocks);
  append_label_blocks(g, overlap ? "R:" : "", blocks);
  return family_from_label_blocks(blocks);
}

SetFamily union_families(const SetFamily& f, const SetFamily& g) {
  std::vector<std::vector<Label>> blocks;
  blocks.reserve(f.size() + g.size());
  append_label_blocks(f, "", blocks);
  append_label_blocks(g, "", blocks);
  return family_from_label_blocks(blocks); // duplicate blocks rejected there
}

SetFamily join(const SetFamily& f, const SetFamily& g) {
  if (universes_overlap(f, g))
    throw Error(Err::OverlappingUniverses, "join requires disjoint point sets");
  std::vector<std::vector<Label>> blocks;
  blocks.reserve(f.size() * g.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto fb = f.block_labels(i);
    for (std::size_t j = 0; j < g.size(); ++j) {
      std::vector<Label> b = fb;
      const auto gb = g.block_labels(j);
      b.insert(b.end(), gb.begin(), gb.end());
      blocks.push_back(std::move(b));
    }
  }
  return family_from_label_blocks(blocks);
}

} // namespace ifam
