#include "runpaths/euler.hpp"

#include <algorithm>
#include <sstream>

namespace runpaths::euler {

Rat general_binomial(const Rat& x, long k) {
    if (k < 0) throw std::invalid_argument("general_binomial: k must be >= 0");
    Rat result(1);
    for (long j = 0; j < k; ++j) {
        result *= x - Rat(j);
        result /= Rat(j + 1);
    }
    return result;
}

Int euler_coeff(long x, long k, int r) {
    if (r < 1) throw std::invalid_argument("euler_coeff: r must be >= 1");
    if (k < 0) throw std::invalid_argument("euler_coeff: k must be >= 0");
    Int sum(0);
    Int xz(x);
    for (long i = 0; i <= k / r; ++i) {
        Int term = binom_int(xz, static_cast<unsigned long>(i)) *
                   binom_int(Int(x + k - static_cast<long>(r) * i - 1),
                             static_cast<unsigned long>(k - static_cast<long>(r) * i));
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

namespace {

// coefficients of (1 + t + ... + t^(r-1))^e, truncated after t^cap
std::vector<Int> power_of_run_poly(int r, unsigned long e, size_t cap) {
    std::vector<Int> base(static_cast<size_t>(r), Int(1));
    if (base.size() > cap + 1) base.resize(cap + 1);
    std::vector<Int> acc{Int(1)};
    std::vector<Int> sq = base;
    while (e > 0) {
        if (e & 1) {
            std::vector<Int> next(std::min(acc.size() + sq.size() - 1, cap + 1), Int(0));
            for (size_t i = 0; i < acc.size(); ++i)
                for (size_t j = 0; j < sq.size() && i + j < next.size(); ++j)
                    next[i + j] += acc[i] * sq[j];
            acc = std::move(next);
        }
        e >>= 1;
        if (e == 0) break;
        std::vector<Int> next(std::min(2 * sq.size() - 1, cap + 1), Int(0));
        for (size_t i = 0; i < sq.size(); ++i)
            for (size_t j = 0; j < sq.size() && i + j < next.size(); ++j)
                next[i + j] += sq[i] * sq[j];
        sq = std::move(next);
    }
    return acc;
}

}  // namespace

std::vector<Int> euler_row(long x, int r, long k_max) {
    if (r < 1) throw std::invalid_argument("euler_row: r must be >= 1");
    if (k_max < 0) throw std::invalid_argument("euler_row: k_max must be >= 0");
    std::vector<Int> row(static_cast<size_t>(k_max) + 1, Int(0));
    if (x >= 0) {
        std::vector<Int> coeffs = power_of_run_poly(r, static_cast<unsigned long>(x),
                                                    static_cast<size_t>(k_max));
        for (size_t k = 0; k < coeffs.size() && k < row.size(); ++k) row[k] = coeffs[k];
    } else {
        for (long k = 0; k <= k_max; ++k) row[static_cast<size_t>(k)] = euler_coeff(x, k, r);
    }
    return row;
}

Int catalan(long n) {
    if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
    Int b = binom_int(Int(2 * n), static_cast<unsigned long>(n));
    Int c;
    mpz_divexact_ui(c.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n + 1));
    return c;
}

namespace {

std::string args3(long n, long k, int r) {
    std::ostringstream os;
    os << "n=" << n << " k=" << k << " r=" << r;
    return os.str();
}

std::string mismatch(const Int& lhs, const Int& rhs) {
    return "lhs=" + lhs.get_str() + " rhs=" + rhs.get_str();
}

}  // namespace

CheckReport verify_identities(long n_max, long k_max, int r_max) {
    if (n_max < 0 || k_max < 0 || r_max < 2)
        throw std::invalid_argument("verify_identities: bad bounds");
    CheckReport rep;
    rep.name = "euler-identities";

    for (int r = 2; r <= r_max; ++r) {
        // Precompute rows from the defining sum so the identities exercise
        // euler_coeff itself, not the product fast path.
        long x_top = std::max(2 * n_max + 1, k_max);
        long k_top = std::max(k_max, n_max * (r - 1) + 1);
        std::vector<std::vector<Int>> row(static_cast<size_t>(x_top) + 1);
        for (long x = 0; x <= x_top; ++x) {
            row[static_cast<size_t>(x)].reserve(static_cast<size_t>(k_top) + 1);
            for (long k = 0; k <= k_top; ++k)
                row[static_cast<size_t>(x)].push_back(euler_coeff(x, k, r));
        }
        auto at = [&](long x, long k) -> Int {
            if (k < 0) return Int(0);
            if (k > k_top) return euler_coeff(x, k, r);
            return row[static_cast<size_t>(x)][static_cast<size_t>(k)];
        };

        for (long n = 0; n <= n_max; ++n) {
            for (long k = 0; k <= k_max; ++k) {
                // 1. Pascal
                if (n >= 1) {
                    Int rhs(0);
                    for (int i = 0; i < r; ++i) rhs += at(n - 1, k - i);
                    ++rep.checks_run;
                    if (at(n, k) != rhs)
                        rep.fail("pascal", args3(n, k, r), mismatch(at(n, k), rhs));
                }
                // 2. symmetry over the support 0 <= k <= n(r-1)
                if (k <= n * (r - 1)) {
                    ++rep.checks_run;
                    if (at(n, k) != at(n, n * (r - 1) - k))
                        rep.fail("symmetry", args3(n, k, r),
                                 mismatch(at(n, k), at(n, n * (r - 1) - k)));
                }
                // 6. binom(n,k)_r = binom(n+k-1,k) once r exceeds k
                if (r > k) {
                    Int rhs = binom_int(Int(n + k - 1), static_cast<unsigned long>(k));
                    ++rep.checks_run;
                    if (at(n, k) != rhs)
                        rep.fail("large-r reduction", args3(n, k, r), mismatch(at(n, k), rhs));
                }
                // 5. the r -> r+1 recurrence. The summand binom(k-i, i)_r
                // vanishes once i > (k-i)(r-1), so the sum effectively stops
                // at floor(k(r-1)/r); at r = 2 that is the floor(k/2) bound
                // the identity is usually quoted with.
                {
                    Int rhs(0);
                    for (long i = 0; i <= k; ++i)
                        rhs += binom_int(Int(n), static_cast<unsigned long>(k - i)) *
                               at(k - i, i);
                    Int lhs = euler_coeff(n, k, r + 1);
                    ++rep.checks_run;
                    if (lhs != rhs)
                        rep.fail("r+1 recurrence", args3(n, k, r), mismatch(lhs, rhs));
                }
            }
            // 3. Vandermonde convolution, all splits n + m
            for (long m = 0; m <= n_max; ++m) {
                for (long k = 0; k <= k_max; ++k) {
                    Int rhs(0);
                    for (long i = 0; i <= k; ++i) rhs += at(n, i) * at(m, k - i);
                    ++rep.checks_run;
                    if (at(n + m, k) != rhs) {
                        std::ostringstream os;
                        os << "n=" << n << " m=" << m << " k=" << k << " r=" << r;
                        rep.fail("vandermonde", os.str(), mismatch(at(n + m, k), rhs));
                    }
                }
            }
            // 4. Catalan-type identity
            {
                Rat lhs = make_rat(at(n + 1, n), Int(n + 1));
                Rat rhs(at(n, n));
                for (long i = 1; i <= r - 2; ++i) rhs -= Rat(i) * Rat(at(n, n - i - 1));
                ++rep.checks_run;
                if (lhs != rhs)
                    rep.fail("catalan identity", args3(n, n, r),
                             "lhs=" + rat_to_string(lhs) + " rhs=" + rat_to_string(rhs));
            }
        }
    }

    // Catalan limit form: once r >= n+1 the identity collapses to C_n.
    for (long n = 0; n <= n_max; ++n) {
        for (int dr = 0; dr < 2; ++dr) {
            int r = static_cast<int>(n) + 1 + dr;
            Int lhs = euler_coeff(n + 1, n, r);
            Int rhs = Int(n + 1) * catalan(n);
            ++rep.checks_run;
            if (lhs != rhs) rep.fail("catalan limit", args3(n, n, r), mismatch(lhs, rhs));
        }
    }

    return rep;
}

}  // namespace runpaths::euler
