#pragma once

/**
 * Generalized binomial ("Euler") coefficients.
 *
 * binom(x, k)_r is the coefficient of t^k in ((1 - t^r)/(1 - t))^x, which for
 * x >= 0 is the polynomial (1 + t + ... + t^(r-1))^x and for r = 2 reduces to
 * the ordinary binomial coefficient. The upper argument may be negative; the
 * value is then a coefficient of the integer power series (1-t)^-x / (1-t^r)^-x.
 */

#include <vector>

#include "runpaths/exact.hpp"
#include "runpaths/report.hpp"

namespace runpaths::euler {

// x(x-1)...(x-k+1)/k! for rational x; 1 when k = 0.
Rat general_binomial(const Rat& x, long k);

// binom(x, k)_r via the alternating binomial expansion
//   sum_{i=0}^{floor(k/r)} (-1)^i binom(x, i) binom(x + k - r*i - 1, k - r*i).
// Rejects r < 1 and k < 0; any integer x is allowed.
Int euler_coeff(long x, long k, int r);

// Entries k = 0..k_max of row x. For x >= 0 this takes the fast path of
// raising 1 + t + ... + t^(r-1) to the x-th power.
std::vector<Int> euler_row(long x, int r, long k_max);

// n-th Catalan number binom(2n, n)/(n + 1)
Int catalan(long n);

// Checks the classical identities of the Euler coefficients over the full
// cross product 0 <= n <= n_max, 0 <= k <= k_max, 2 <= r <= r_max:
//   1. Pascal:      binom(n,k)_r = sum_{i<r} binom(n-1,k-i)_r
//   2. symmetry:    binom(n,k)_r = binom(n, n(r-1)-k)_r
//   3. Vandermonde: binom(n+m,k)_r = sum_i binom(n,i)_r binom(m,k-i)_r
//   4. Catalan-type: binom(n+1,n)_r/(n+1) = binom(n,n)_r - sum_{i=1}^{r-2} i binom(n,n-i-1)_r
//   5. r -> r+1:    binom(n,k)_{r+1} = sum_i binom(n,k-i) binom(k-i,i)_r
//                   (support ends at i = floor(k(r-1)/r); k/2 when r = 2)
//   6. large r:     binom(n,k)_r = binom(n+k-1,k) whenever r > k
// plus the Catalan limit form binom(n+1,n)_r = (n+1) C_n for r >= n+1.
CheckReport verify_identities(long n_max, long k_max, int r_max);

}  // namespace runpaths::euler
