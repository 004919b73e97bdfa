#pragma once

/**
 * Exact polynomials over the rationals and the path-count polynomial families.
 *
 * The families are all Sheffer sequences for the same degree-lowering operator
 * (the one with E^1 = 1 + B + ... + B^(r-1)); they differ only in their initial
 * values:
 *   basic  b_n : b_n(0) = delta_{0,n}; b_n(x) = binom(x, n)_r
 *   S      s_n : s_n(n-1) = delta_{n,0}; column-n extension of the E-run table
 *   P      p_n : staircase zeros p_{(r-2)m+j}(m) = 0, j = 1..r-2
 *   Q      q_n : q_n = b_n for n <= alpha, then zeros at q_n(n-alpha-1) = 0
 * Every member has degree n and takes integer values at integer arguments.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "runpaths/exact.hpp"
#include "runpaths/report.hpp"

namespace runpaths::polyseq {

// Dense univariate polynomial, coefficients ascending. No trailing zeros are
// stored; the zero polynomial has an empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);
    explicit Polynomial(const Rat& constant);

    static Polynomial zero() { return Polynomial(); }
    // binom(x + shift, k) as a polynomial in x
    static Polynomial binomial(long shift, long k);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }

    Rat eval(const Rat& x) const;
    // evaluation at an integer point, checked to reduce to an integer
    Int eval_int(long x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& s) const;
    bool operator==(const Polynomial& o) const = default;

    // composition with x + a
    Polynomial shifted(long a) const;

    // exact division by (x - root); throws if the remainder is nonzero
    Polynomial divide_by_linear(const Rat& root) const;

    std::string to_string() const;  // human-readable expanded form

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

// f with f(x) - f(x-1) = g(x) and f(0) = 0, computed exactly in the
// binomial-coefficient basis (Newton forward-difference form of g).
Polynomial discrete_antidifference(const Polynomial& g);

Polynomial basic_poly(long n, int r);
Polynomial s_poly(long n, int r);
Polynomial p_poly(long n, int r);               // requires r >= 3
Polynomial q_poly(long n, long alpha, int r);

enum class FamilyKind { Basic, S, P, Q };

// Caches members 0..n of one family; construction of P/Q members is
// incremental (each needs its two predecessors in index).
class PolyFamily {
public:
    PolyFamily(FamilyKind kind, int r, long alpha = -1);
    const Polynomial& member(long n);
    FamilyKind kind() const { return kind_; }
    int r() const { return r_; }
    long alpha() const { return alpha_; }

private:
    FamilyKind kind_;
    int r_;
    long alpha_;
    std::vector<Polynomial> members_;
};

// Binomial theorem for Sheffer sequences, f_n(y+x) = sum_i f_i(y) b_{n-i}(x),
// checked exactly at the given integer (x, y) pairs for all n <= n_max.
// family must be S or Q.
CheckReport sheffer_binomial_check(FamilyKind family, int r, long alpha, long n_max,
                                   const std::vector<std::pair<long, long>>& points);

// b_n(x+1) = sum_{i=0}^{r-1} b_{n-i}(x), compared coefficientwise.
CheckReport operator_identity_check(int r, long n_max);

// b_n(y+x+n) = sum_i b_i(y+i) * x/(x+n-i) * b_{n-i}(x+n-i) at integer points
// with all denominators nonzero (the a = 1, c = 0 instance).
CheckReport abelization_check(int r, long n_max, long x_min, long x_max, long y_min,
                              long y_max);

}  // namespace runpaths::polyseq
