#pragma once

/**
 * Cross-module verification suites. Each check pits independent routes to the
 * same numbers against each other: closed form vs recurrence table vs
 * brute-force enumeration, polynomial vs grid, series vs coefficient formula.
 */

#include <vector>

#include "runpaths/report.hpp"

namespace runpaths::verify {

// Euler identities, Sheffer binomial theorem for the S and Q families,
// abelized convolution, operator identity, and the polynomial identity of the
// two printed shapes of the down-step generating function factor.
CheckReport suite_identities(long n_max, const std::vector<int>& r_set);

// The two printed shapes of the gen_func_down factor, compared as polynomials.
CheckReport check_genfunc_factor_forms(const std::vector<int>& r_set);

// Sheffer binomial theorem for the S and Q families at 14 fixed integer
// points, the operator identity, and the abelized convolution.
CheckReport check_sheffer_consequences(long n_max, const std::vector<int>& r_set);

// All seven printed tables against recomputed grids (erratum whitelisted).
CheckReport suite_tables();

// Composition lemma P = Q, the composition <-> grid bridges, the rotation
// between the t' and p tables, and the three-way t = p = q identity.
CheckReport suite_bridge(long n_max, const std::vector<int>& r_set);

// Closed form = recurrence table = brute force for both run directions over
// all ballot points with n + m <= max_sum.
CheckReport suite_oracle(long max_sum, const std::vector<int>& r_set);

// Generating-function checks: gen_func_down against the closed-form counts
// and the diagonal functional equation.
CheckReport suite_genfunc(long order, long m_max, const std::vector<int>& r_set);

// Conjectured r = 4 generating function (evidence only).
CheckReport suite_conjecture(long order, long gf_order, long x_max, long brute_max);

}  // namespace runpaths::verify
