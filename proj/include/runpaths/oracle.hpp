#pragma once

/**
 * Brute-force ground truth.
 *
 * Everything here counts by direct state-space enumeration (position, last
 * step, current run length) and deliberately shares no code with the closed
 * forms, recurrence tables or polynomial machinery it is used to validate.
 * Inputs beyond the size guards are refused outright rather than truncated.
 */

#include "runpaths/exact.hpp"
#include "runpaths/types.hpp"

namespace runpaths::oracle {

// Largest n+m (ballot) / x (Dyck) accepted by the path counters.
inline constexpr long kMaxPathSteps = 26;

// Ballot paths (0,0) -> (n,m), N/E steps, weakly above y = x, avoiding
// restriction.dir repeated restriction.r times.
Int ballot_paths(long n, long m, const RunRestriction& restriction);

// Dyck paths (0,0) -> (x,y), up/down steps, weakly above the axis.
// Dir::North forbids runs of up steps, Dir::East runs of down steps.
Int dyck_paths(long x, long y, const RunRestriction& restriction);

enum class CompositionSide { P, Q };

// Restricted compositions into n parts from {0, ..., c+1}:
//   P: parts sum to c*n - alpha, prefix sums bounded by c*k
//   Q: parts sum to n + alpha,   prefix sums bounded by k + alpha
// (prefix bounds for k = 1..n-1).
Int count_restricted_compositions(int c, long n, long alpha, CompositionSide side);

// Motzkin paths to (n,0) containing neither "uu" nor "ud" (peakless).
Int motzkin_peakless_bruteforce(long n);

inline constexpr long kMaxMotzkinSteps = 24;
inline constexpr long kMaxCompositionParts = 30;

}  // namespace runpaths::oracle
