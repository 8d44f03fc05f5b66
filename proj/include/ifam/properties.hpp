#pragma once

#include "ifam/family.hpp"
#include "ifam/transversal.hpp"
#include "ifam/verdict.hpp"

namespace ifam {

// Pairwise intersection of all blocks; witness on failure is the first
// disjoint pair in canonical block order.
PropertyVerdict is_intersecting(const SetFamily& f);

// All blocks the same size; witness on failure is a pair of blocks of
// different sizes.
PropertyVerdict is_uniform(const SetFamily& f);

// Maximality: f is k-uniform, tau(f) = k, and f equals its own family of
// minimum blocking sets. Errors: NotUniform.
PropertyVerdict is_mif(const SetFamily& f);

// Closedness for a k-uniform intersecting family with tau(f) <= k-1.
// Evaluates three equivalent formulations independently and cross-checks:
//   (a) the only blocking sets of F ∪ F^T with at most k points are the
//       blocks of F themselves,
//   (b) no blocking set of F with at most k points that is not a block of F
//       also blocks F^T,
//   (c) F is exactly the family of minimum blocking sets of F ∪ F^T.
// Errors: NotUniform, NotIntersecting, TauTooLarge (tau = k), and
// CharacterizationMismatch if the formulations ever disagree (engine bug).
PropertyVerdict is_cif(const SetFamily& f);

// tau of the family of minimum blocking sets of f.
std::size_t tau_of_dual(const SetFamily& f);

} // namespace ifam
