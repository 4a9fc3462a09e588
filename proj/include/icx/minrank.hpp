#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "icx/fitting.hpp"
#include "icx/verifier.hpp"

namespace icx {

inline constexpr std::uint64_t kDefaultSubspaceGuard = 1'000'000'000;

struct MinrankResult {
  int value = 0;
  Mat witness;  // value x K code verified against the input
  // refuted_counts[i] is the number of (i+1)-dimensional subspaces that
  // were exhaustively enumerated and found infeasible; together these
  // certify that no shorter code exists.
  std::vector<std::uint64_t> refuted_counts;
};

// Number of r-dimensional subspaces of GF(p)^K (Gaussian binomial),
// saturating at UINT64_MAX on overflow.
std::uint64_t subspace_count(int K, int r, const Field& field);

// Visits the canonical reduced-row-echelon basis of every r-dimensional
// subspace of GF(p)^K exactly once, in a fixed order: pivot column sets
// ascend lexicographically; within a pivot set the free entries run
// through an odometer in row-major order with the last cell fastest.
// The visited matrix is a shared buffer, valid only during the call.
// Return false from the visitor to stop early.
void enumerate_rref_bases(int K, int r, const Field& field,
                          const std::function<bool(const Mat&)>& visit);

// First (in canonical enumeration order) r-row code that solves f, or
// nullopt after exhausting all r-dimensional subspaces. Throws
// ResourceGuard when the subspace count exceeds `guard`.
std::optional<Mat> is_achievable(const FittingMatrix& f, int r,
                                 const Field& field,
                                 std::uint64_t guard = kDefaultSubspaceGuard);

// Smallest r for which is_achievable succeeds, with the witness and the
// exhaustion counts for every smaller r.
MinrankResult minrank(const FittingMatrix& f, const Field& field,
                      std::uint64_t guard = kDefaultSubspaceGuard);

// Checks that f is the top-left block of f_ext (the containment needed
// for the submatrix lower bound on minrank); throws ContainmentViolation
// otherwise.
bool minrank_lower_bound_submatrix(const FittingMatrix& f_ext,
                                   const FittingMatrix& f);

}  // namespace icx
