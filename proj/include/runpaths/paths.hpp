#pragma once

/**
 * Closed-form path counts.
 *
 * Ballot paths run from (0,0) to (n,m) with N/E unit steps, weakly above
 * y = x; Dyck paths run to (x,y) with up/down steps, weakly above the axis.
 * The two pictures are equivalent under n = (x-y)/2, m = (x+y)/2.
 *
 * Counts avoiding r consecutive E steps extend to a polynomial s_n(m) in m;
 * ballot_avoid_east accepts any integer m and returns the extension value
 * outside the combinatorial range.
 */

#include "runpaths/exact.hpp"
#include "runpaths/types.hpp"

namespace runpaths::paths {

// s_n(m) = (m-n+1)/(m+1) * binom(m+1, n)_r.
// The quotient form is singular at m = -1; that point is evaluated through
// the polynomial representation instead.
Int ballot_avoid_east(long n, long m, int r);

// t_n(m), the ballot paths avoiding r consecutive N steps; requires m >= n.
// Zero above the reachable wedge (m > (r-1)(n+1)).
Int ballot_avoid_north(long n, long m, int r);

// Sheffer polynomial value q_n(x; alpha) =
//   sum_{i=0}^{alpha} binom(i-alpha-1, i)_r (x+alpha+1-n)/(x+alpha+1-i)
//                     binom(x+alpha+1-i, n-i)_r.
// Singular denominators are routed through the polynomial representation.
Int sheffer_q(long n, long x, long alpha, int r);

// Dyck paths to (x,y) avoiding r consecutive down steps. Requires
// 0 <= y <= x and x = y (mod 2).
Int dyck_avoid_down(long x, long y, int r);

// Dyck paths to (x,y) avoiding r consecutive up steps. The y = 0 counts
// coincide with the down-step counts; they are taken from (x-1, 1).
Int dyck_avoid_up(long x, long y, int r);

}  // namespace runpaths::paths
