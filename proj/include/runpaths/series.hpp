#pragma once

/**
 * Truncated formal power series over exact rationals, plus the generating
 * functions tied to the run-restricted path counts.
 */

#include <vector>

#include "runpaths/exact.hpp"
#include "runpaths/report.hpp"

namespace runpaths::series {

// Coefficients c_0..c_N with explicit truncation order N. Binary operations
// truncate to the smaller operand order; all arithmetic is exact.
class TruncatedSeries {
public:
    explicit TruncatedSeries(long order);  // zero series
    TruncatedSeries(std::vector<Rat> coeffs, long order);

    static TruncatedSeries constant(const Rat& c, long order);
    static TruncatedSeries monomial(const Rat& c, long exponent, long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rat& coeff(long k) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(long order) const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    // requires an invertible (nonzero) constant term
    TruncatedSeries operator/(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const = default;

    // integer powers; negative exponents invert first
    TruncatedSeries pow(long e) const;

    // square root with positive constant term; the constant term must be the
    // square of a rational. Coefficientwise recursion, exact.
    TruncatedSeries sqrt() const;

private:
    std::vector<Rat> coeffs_;  // size = order + 1
};

// Generating function over n of the ballot counts s_n(m) avoiding E^r:
//   (1-t^r)^m / (1-t)^(m+2) * (r t^r (1-t) + (1-t^r)(1-2t)).
TruncatedSeries gen_func_down(long m, int r, long order);

// Builds f(t) = sum_n s_n(n) t^n and checks the functional equation of the
// diagonal generating function in both of its faithful forms,
//   f = 1 + sum_{i=1}^{r-1} t^i f^i      and      f (1 - t f) = 1 - t^r f^r.
// A third, historically published shape of the second form,
// f = (1 - t - t^r f^r)/(1 - 2t), differs from these by t (f - 1)^2 and is
// reported as a note with its first failing order, not as a failure.
CheckReport dyck_gf_functional_check(int r, long order);

// Peakless Motzkin numbers M'(n) = sum_i binom(n-i, 2i) C_i.
Int motzkin_peakless(long n);

// (3 + t - sqrt((1+t)^2 + 4t^3))/2 * ((1-t^4)/(1-t))^x, the conjectured
// generating function of the P-family columns for r = 4.
TruncatedSeries conjecture_series(long x, long order);

// Same ansatz for other r, with the closed-form first factor replaced by the
// empirical series sum_n p_n(0) t^n. Exploratory; r = 4 reproduces
// conjecture_series.
TruncatedSeries gf_ansatz_series(long x, int r, long order);

// Conjecture evidence, never proof:
//  (a) p_n(0) = (-1)^n M'(n-3) for 3 <= n <= order;
//  (b) [t^n] conjecture_series(x) = p_n(x) for n <= gf_order, 0 <= x <= x_max.
CheckReport conjecture_check(long order, long gf_order, long x_max);

}  // namespace runpaths::series
