#pragma once

#include <cstdint>
#include <utility>

#include "ifam/constructions.hpp"
#include "ifam/family.hpp"

namespace ifam {

// Result of a composition. `checklist` records each precondition that was
// evaluated (all true on success: a failed precondition throws instead).
// `claimed_uk` / `claimed_tau` / `claim` state what the composition
// guarantees for the result; when `verify` was requested the engine recomputes
// those claims exhaustively and sets `verified`.
struct CompositionReport {
  SetFamily result;
  std::vector<std::pair<std::string, bool>> checklist;
  std::size_t claimed_uk = 0;
  std::size_t claimed_tau = 0;
  std::string claim;
  bool verified = false;
};

// Attach a maximal family of size k - tau(F) across every minimum blocking
// set of a closed family F: result = F ∪ (A ⊛ F^T), a maximal family of
// size k. Errors: NotCif, NotMif, SizeMismatch.
CompositionReport embed(const SetFamily& cif, const SetFamily& mif, bool verify = false);

// Same, but the minimum blocking sets are split into classes C_1..C_n, each
// receiving its own maximal family. Requires every member of a class to meet
// every transversal outside that class, and n at most C(2t,t)/2.
// `classes` are indices into transversals(cif).transversals.
// Errors: NotCif, TooManyClasses, BadPartition, ConditionCFailed, NotMif,
// SizeMismatch.
CompositionReport embed_partitioned(const SetFamily& cif,
                                    const std::vector<std::vector<std::size_t>>& classes,
                                    const std::vector<SetFamily>& mifs, bool verify = false);

// Cross an affine plane of order n = k - tau(F) with a partition of the
// minimum blocking sets into n+1 intersecting classes such that every member
// of a class has a disjoint partner in every other class. Class i is joined
// with parallel class i of the plane.
// Errors: NotCif, TauMismatch, BadPartition, ConditionAFailed,
// ConditionBFailed.
CompositionReport embed_affine(const SetFamily& cif,
                               const std::vector<std::vector<std::size_t>>& classes,
                               const AffinePlane& plane, bool verify = false);

// Substitute one factor family for every point of a maximal pattern family:
// blocks are unions of one factor block per pattern-block point. Factors must
// be uniform with a common block size and cover number. With `require_cif`
// each factor must additionally be closed with a maximal dual
// (tau of the factor's dual = factor block size), making the result closed.
// Errors: NotMif, InvalidParams, NonUniformFactors, NotCif, DualTauMismatch.
CompositionReport product(const SetFamily& mif, const std::vector<SetFamily>& factors,
                          bool require_cif = false, bool verify = false);

// Grow a closed family: H = G ∪ (F ⊛ G^T) where the blocks of G are larger
// than those of F by exactly tau(G), and tau(G^T) exceeds tau(F) + tau(G).
// Errors: NotUniform, ShapeMismatch, DualTauTooSmall.
CompositionReport extend(const SetFamily& f, const SetFamily& g, bool verify = false);

// Inverse of embed at a single point: split a maximal family X into
// F = {B : alpha not in B} and D = {B \ {alpha} : alpha in B}, checking that
// D is exactly the family of minimum blocking sets of F and that
// F ∪ ({alpha} ⊛ D) reconstructs X.
// Errors: NotMif, IndexOutOfRange, InvalidParams, ReconstructionMismatch.
std::pair<SetFamily, SetFamily> decompose_at(const SetFamily& x, const Label& alpha);

// One recursion step of the size lower bound: bound = stem + factor * base,
// where base is a known bound for the reduced block size k - t.
struct BoundTable {
  std::size_t k = 0;
  std::size_t t = 0;
  std::size_t r = 0; // half of t, rounded up (odd) / exactly (even)
  unsigned long long base = 0;
  unsigned long long stem = 0;
  unsigned long long factor = 0;
  unsigned long long bound = 0;
  std::string branch; // "odd" or "even"
  std::size_t reduced_order = 0;
};

BoundTable lower_bound(std::size_t k, std::size_t t, unsigned long long base);

// Closed-form bound from iterating the construction:
// even k: (k/2+1)^(k-1); odd k: ((k+1)/2 * (k+3)/2)^((k-1)/2).
unsigned long long corollary_bound(std::size_t k);

// Exhaustive search over all partitions of the minimum blocking sets of a
// closed family into exactly n classes, keeping those that satisfy the
// chosen composition's side conditions. The search budget caps n^m where m
// is the number of minimum blocking sets.
enum class PartitionMode { pointset, affine };

const char* to_string(PartitionMode mode);

struct PartitionSearchResult {
  PartitionMode mode = PartitionMode::pointset;
  std::size_t n_classes = 0;
  SetFamily transversals; // index space of the partitions below
  std::vector<std::vector<std::vector<std::size_t>>> partitions;
};

PartitionSearchResult search_partitions(const SetFamily& cif, std::size_t n,
                                        PartitionMode mode,
                                        std::uint64_t budget = 10'000'000);

} // namespace ifam
