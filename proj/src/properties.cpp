#include "ifam/properties.hpp"

#include <algorithm>
#include <sstream>

namespace ifam {

PropertyVerdict is_intersecting(const SetFamily& f) {
  PropertyVerdict v;
  v.property = "intersecting";
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!f.blocks()[i].intersects(f.blocks()[j])) {
        v.holds = false;
        v.witness = {f.block_labels(i), f.block_labels(j)};
        v.detail = "blocks " + std::to_string(i) + " and " + std::to_string(j) + " are disjoint";
        return v;
      }
  v.holds = true;
  v.detail = "all " + std::to_string(f.size()) + " blocks pairwise intersect";
  return v;
}

PropertyVerdict is_uniform(const SetFamily& f) {
  PropertyVerdict v;
  v.property = "uniform";
  if (auto k = f.uniform_k()) {
    v.holds = true;
    v.detail = "all blocks have size " + std::to_string(*k);
    return v;
  }
  std::size_t first = f.blocks().front().count();
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f.blocks()[i].count() != first) {
      v.witness = {f.block_labels(0), f.block_labels(i)};
      break;
    }
  v.holds = false;
  v.detail = "block sizes differ";
  return v;
}

PropertyVerdict is_mif(const SetFamily& f) {
  auto k = f.uniform_k();
  if (!k) throw Error(Err::NotUniform, "maximality is defined for uniform families");
  PropertyVerdict v;
  v.property = "mif";
  TransversalReport rep = transversals(f);
  if (rep.tau != *k) {
    v.holds = false;
    if (rep.transversals.size() > 0) v.witness = {rep.transversals.block_labels(0)};
    v.detail = "tau = " + std::to_string(rep.tau) + " but k = " + std::to_string(*k);
    return v;
  }
  if (rep.transversals == f) {
    v.holds = true;
    v.detail = "tau = k = " + std::to_string(*k) +
               " and the minimum blocking sets are exactly the blocks";
    return v;
  }
  v.holds = false;
  // Witness: a minimum blocking set that is not a block, if any; otherwise a
  // block that is not a minimum blocking set.
  for (std::size_t i = 0; i < rep.transversals.size(); ++i) {
    Mask m;
    for (const Label& l : rep.transversals.block_labels(i)) m.set(*f.index_of(l));
    if (!f.has_block(m)) {
      v.witness = {rep.transversals.block_labels(i)};
      v.detail = "a minimum blocking set is not a block";
      return v;
    }
  }
  v.detail = "some block is not a minimum blocking set";
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto lbls = f.block_labels(i);
    bool found = false;
    for (std::size_t j = 0; j < rep.transversals.size(); ++j)
      if (rep.transversals.block_labels(j) == lbls) { found = true; break; }
    if (!found) {
      v.witness = {lbls};
      break;
    }
  }
  return v;
}

namespace {

// Resolve a label set from family `src` into a mask over family `dst`.
// Returns nullopt when some label is missing.
std::optional<Mask> remask(const SetFamily& src, Mask m, const SetFamily& dst) {
  Mask out;
  for (std::size_t p : m.members()) {
    auto idx = dst.index_of(src.label(p));
    if (!idx) return std::nullopt;
    out.set(*idx);
  }
  return out;
}

} // namespace

PropertyVerdict is_cif(const SetFamily& f) {
  auto uk = f.uniform_k();
  if (!uk) throw Error(Err::NotUniform, "closedness is defined for uniform families");
  const std::size_t k = *uk;
  PropertyVerdict inter = is_intersecting(f);
  if (!inter.holds) {
    std::string w;
    if (!inter.witness.empty()) {
      for (const auto& side : inter.witness) {
        w += " {";
        for (const auto& l : side) w += l + ",";
        w += "}";
      }
    }
    throw Error(Err::NotIntersecting, "closedness is defined for intersecting families;" + w);
  }
  TransversalReport rep = transversals(f);
  if (rep.tau > k - 1)
    throw Error(Err::TauTooLarge, "tau = " + std::to_string(rep.tau) +
                                      " but closedness requires tau <= k-1 = " +
                                      std::to_string(k - 1));

  const SetFamily closure = union_families(f, rep.transversals);

  // (a) blocking sets of F ∪ F^T with at most k points are exactly F.
  bool holds_a = true;
  std::vector<Label> witness_a;
  for (std::size_t s = 1; s <= k && holds_a; ++s) {
    for (const Mask& m : blocking_set_masks_of_size(closure, s)) {
      auto in_f = remask(closure, m, f);
      bool is_block = s == k && in_f && f.has_block(*in_f);
      if (!is_block) {
        holds_a = false;
        witness_a = closure.labels_of(m);
        break;
      }
    }
  }

  // (b) no small blocking set of F, other than the blocks themselves, also
  // blocks F^T.
  bool holds_b = true;
  std::vector<Label> witness_b;
  for (std::size_t s = 1; s <= k && holds_b; ++s) {
    for (const Mask& m : blocking_set_masks_of_size(f, s)) {
      if (s == k && f.has_block(m)) continue;
      // Points outside the dual's universe never help hit a transversal.
      Mask partial;
      for (std::size_t p : m.members())
        if (auto idx = rep.transversals.index_of(f.label(p))) partial.set(*idx);
      if (is_blocking(partial, rep.transversals)) {
        holds_b = false;
        witness_b = f.labels_of(m);
        break;
      }
    }
  }

  // (c) F is the family of minimum blocking sets of F ∪ F^T.
  TransversalReport closure_rep = transversals(closure);
  bool holds_c = closure_rep.transversals == f;

  if (holds_a != holds_b || holds_b != holds_c) {
    std::ostringstream os;
    os << "closure characterizations disagree: a=" << holds_a << " b=" << holds_b
       << " c=" << holds_c;
    throw Error(Err::CharacterizationMismatch, os.str());
  }

  PropertyVerdict v;
  v.property = "cif";
  v.holds = holds_a;
  if (v.holds) {
    v.detail = "tau = " + std::to_string(rep.tau) +
               "; all three closure characterizations agree";
  } else {
    if (!witness_a.empty()) v.witness = {witness_a};
    else if (!witness_b.empty()) v.witness = {witness_b};
    v.detail = "family is not closed; all three characterizations agree";
  }
  return v;
}

std::size_t tau_of_dual(const SetFamily& f) {
  TransversalReport rep = transversals(f);
  return tau(rep.transversals);
}

} // namespace ifam
