#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace runpaths {

// All counts and coefficients are exact: arbitrary-precision integers and
// canonical rationals throughout. No floating point anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Extract the integer value of a rational known to reduce to denominator 1.
// The combinatorial formulas always reduce; a non-unit denominator means a bug.
inline Int to_int(const Rat& q) {
    if (!is_integer(q))
        throw std::logic_error("to_int: value is not an integer: " + q.get_str());
    return q.get_num();
}

// binomial(n, k) for integer n of either sign, k >= 0
inline Int binom_int(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// "p/q", or just "p" when the denominator is 1
inline std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace runpaths
