#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ifam/error.hpp"
#include "ifam/mask.hpp"

namespace ifam {

using Label = std::string;
using PointId = std::size_t;

class SetFamily;

namespace detail {
// Shared canonicalization backend for the two public constructors.
SetFamily build_family(std::vector<Label> labels, std::vector<Mask> raw_blocks,
                       bool universe_is_exact);
} // namespace detail

// A finite family of finite nonempty sets ("blocks") over a labeled universe.
// Canonical form is enforced on construction:
//   - labels sorted ascending and unique, point ids are positions in that list
//   - every point appears in at least one block
//   - blocks unique, kept in lexicographic order of their member lists
// Two families are equal iff they have the same labels and the same blocks.
class SetFamily {
public:
  SetFamily() = default;

  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<Mask>& blocks() const { return blocks_; }

  std::size_t size() const { return blocks_.size(); }
  std::size_t point_count() const { return labels_.size(); }

  // Common block size, or nullopt if block sizes differ. Defined (and cached)
  // at construction.
  std::optional<std::size_t> uniform_k() const { return uniform_k_; }

  const Label& label(PointId p) const { return labels_[p]; }
  std::optional<PointId> index_of(const Label& l) const;

  std::vector<PointId> block_members(std::size_t i) const { return blocks_[i].members(); }
  std::vector<Label> block_labels(std::size_t i) const;
  std::vector<Label> labels_of(Mask m) const;

  Mask universe_mask() const;
  bool has_block(Mask m) const; // binary search in canonical order

  bool operator==(const SetFamily&) const = default;

private:
  std::vector<Label> labels_;
  std::vector<Mask> blocks_;
  std::optional<std::size_t> uniform_k_;

  friend SetFamily detail::build_family(std::vector<Label> labels, std::vector<Mask> raw_blocks,
                                        bool universe_is_exact);
};

// Validating constructor. The universe is exactly `labels`; blocks are given
// as lists of indices into `labels` (treated as sets). Throws Error with code
// EmptyLabel / DuplicateLabel / IndexOutOfRange / EmptyBlock / DuplicateBlock /
// IsolatedPoint / UniverseTooLarge.
SetFamily make_family(std::vector<Label> labels,
                      const std::vector<std::vector<PointId>>& blocks);

// Convenience constructor: blocks given as label sets, universe inferred as
// their union (so no isolated points by construction).
SetFamily family_from_label_blocks(const std::vector<std::vector<Label>>& blocks);

// Extract the subfamily made of the given block indices; the universe shrinks
// to the points those blocks use.
SetFamily subfamily(const SetFamily& f, const std::vector<std::size_t>& block_indices);

// Rename every label through `prefix + label`. A common prefix preserves the
// relative label order, so point ids and block indices are unchanged.
SetFamily prefix_labels(const SetFamily& f, const std::string& prefix);

// True when the two families share at least one label.
bool universes_overlap(const SetFamily& f, const SetFamily& g);

// Union of two block collections kept distinct: when the label sets overlap,
// F's labels are prefixed "L:" and G's "R:" so the copies cannot interact.
// Always |result| = |F| + |G|.
SetFamily disjoint_union(const SetFamily& f, const SetFamily& g);

// Union of two block collections over a merged universe: labels shared by F
// and G name the same point. A block present in both inputs is an error
// (DuplicateBlock), not a silent merge.
SetFamily union_families(const SetFamily& f, const SetFamily& g);

// All pairwise unions {A ∪ B : A in F, B in G} of two families on disjoint
// universes (OverlappingUniverses otherwise). |result| = |F| * |G|.
SetFamily join(const SetFamily& f, const SetFamily& g);

} // namespace ifam
