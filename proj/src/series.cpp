#include "runpaths/series.hpp"

#include <algorithm>
#include <sstream>

#include "runpaths/euler.hpp"
#include "runpaths/paths.hpp"
#include "runpaths/polyseq.hpp"

namespace runpaths::series {

TruncatedSeries::TruncatedSeries(long order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: order must be >= 0");
    coeffs_.assign(static_cast<size_t>(order) + 1, Rat(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rat> coeffs, long order)
    : TruncatedSeries(order) {
    for (size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k)
        coeffs_[k] = std::move(coeffs[k]);
}

TruncatedSeries TruncatedSeries::constant(const Rat& c, long order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rat& c, long exponent, long order) {
    if (exponent < 0) throw std::invalid_argument("TruncatedSeries: negative exponent");
    TruncatedSeries s(order);
    if (exponent <= order) s.coeffs_[static_cast<size_t>(exponent)] = c;
    return s;
}

const Rat& TruncatedSeries::coeff(long k) const {
    if (k < 0 || k > order()) throw std::out_of_range("TruncatedSeries::coeff");
    return coeffs_[static_cast<size_t>(k)];
}

TruncatedSeries TruncatedSeries::truncated(long new_order) const {
    TruncatedSeries s(new_order);
    for (long k = 0; k <= std::min(new_order, order()); ++k)
        s.coeffs_[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k)];
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    long n = std::min(order(), o.order());
    TruncatedSeries s(n);
    for (long k = 0; k <= n; ++k)
        s.coeffs_[static_cast<size_t>(k)] =
            coeffs_[static_cast<size_t>(k)] + o.coeffs_[static_cast<size_t>(k)];
    return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    long n = std::min(order(), o.order());
    TruncatedSeries s(n);
    for (long k = 0; k <= n; ++k)
        s.coeffs_[static_cast<size_t>(k)] =
            coeffs_[static_cast<size_t>(k)] - o.coeffs_[static_cast<size_t>(k)];
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    long n = std::min(order(), o.order());
    TruncatedSeries s(n);
    for (long i = 0; i <= n; ++i) {
        if (coeffs_[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; i + j <= n; ++j)
            s.coeffs_[static_cast<size_t>(i + j)] +=
                coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(j)];
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator/(const TruncatedSeries& o) const {
    long n = std::min(order(), o.order());
    if (o.coeffs_[0] == 0)
        throw std::domain_error("TruncatedSeries: division needs an invertible constant term");
    TruncatedSeries q(n);
    for (long k = 0; k <= n; ++k) {
        Rat acc = coeffs_[static_cast<size_t>(k)];
        for (long j = 1; j <= k; ++j)
            acc -= o.coeffs_[static_cast<size_t>(j)] * q.coeffs_[static_cast<size_t>(k - j)];
        q.coeffs_[static_cast<size_t>(k)] = acc / o.coeffs_[0];
    }
    return q;
}

TruncatedSeries TruncatedSeries::pow(long e) const {
    if (e < 0) {
        TruncatedSeries inv = TruncatedSeries::constant(Rat(1), order()) / *this;
        return inv.pow(-e);
    }
    TruncatedSeries acc = TruncatedSeries::constant(Rat(1), order());
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

namespace {

// exact square root of a nonnegative rational, or nothing
bool rational_sqrt(const Rat& q, Rat& out) {
    if (sgn(q) < 0) return false;
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = make_rat(sn, sd);
    return true;
}

}  // namespace

TruncatedSeries TruncatedSeries::sqrt() const {
    if (coeffs_[0] == 0)
        throw std::domain_error("TruncatedSeries: sqrt needs a nonzero constant term");
    Rat c0;
    if (!rational_sqrt(coeffs_[0], c0))
        throw std::domain_error(
            "TruncatedSeries: sqrt needs a constant term that is a rational square");
    long n = order();
    TruncatedSeries root(n);
    root.coeffs_[0] = c0;
    for (long k = 1; k <= n; ++k) {
        // [t^k] root^2 = sum_{i=0..k} root_i root_{k-i} must match coeffs_[k]
        Rat acc = coeffs_[static_cast<size_t>(k)];
        for (long i = 1; i < k; ++i)
            acc -= root.coeffs_[static_cast<size_t>(i)] * root.coeffs_[static_cast<size_t>(k - i)];
        root.coeffs_[static_cast<size_t>(k)] = acc / (Rat(2) * c0);
    }
    return root;
}

namespace {

// 1 - t^r as a series
TruncatedSeries one_minus_power(long r, long order) {
    TruncatedSeries s = TruncatedSeries::constant(Rat(1), order);
    return s - TruncatedSeries::monomial(Rat(1), r, order);
}

}  // namespace

TruncatedSeries gen_func_down(long m, int r, long order) {
    if (m < 0) throw std::invalid_argument("gen_func_down: m must be >= 0");
    if (r < 2) throw std::invalid_argument("gen_func_down: r must be >= 2");
    TruncatedSeries one_minus_tr = one_minus_power(r, order);
    TruncatedSeries one_minus_t = one_minus_power(1, order);
    TruncatedSeries one_minus_2t =
        TruncatedSeries::constant(Rat(1), order) - TruncatedSeries::monomial(Rat(2), 1, order);
    TruncatedSeries factor =
        TruncatedSeries::monomial(Rat(r), r, order) * one_minus_t + one_minus_tr * one_minus_2t;
    return one_minus_tr.pow(m) * factor / one_minus_t.pow(m + 2);
}

CheckReport dyck_gf_functional_check(int r, long order) {
    if (r < 2) throw std::invalid_argument("dyck_gf_functional_check: r must be >= 2");
    if (order < 0) throw std::invalid_argument("dyck_gf_functional_check: order must be >= 0");
    CheckReport rep;
    rep.name = "dyck-gf-functional-equation";

    std::vector<Rat> diag;
    diag.reserve(static_cast<size_t>(order) + 1);
    for (long n = 0; n <= order; ++n) diag.emplace_back(paths::ballot_avoid_east(n, n, r));
    TruncatedSeries f(diag, order);

    auto first_mismatch = [&](const TruncatedSeries& a, const TruncatedSeries& b) -> long {
        for (long k = 0; k <= std::min(a.order(), b.order()); ++k)
            if (a.coeff(k) != b.coeff(k)) return k;
        return -1;
    };

    // f = 1 + sum_{i=1}^{r-1} t^i f^i
    {
        TruncatedSeries rhs = TruncatedSeries::constant(Rat(1), order);
        TruncatedSeries fpow = TruncatedSeries::constant(Rat(1), order);
        for (int i = 1; i <= r - 1; ++i) {
            fpow = fpow * f;
            rhs = rhs + TruncatedSeries::monomial(Rat(1), i, order) * fpow;
        }
        ++rep.checks_run;
        long k = first_mismatch(f, rhs);
        if (k >= 0) {
            std::ostringstream os;
            os << "first failing order " << k;
            rep.fail("sum form", "r=" + std::to_string(r), os.str());
        }
    }

    // closed form of the same equation: f (1 - t f) = 1 - t^r f^r
    {
        TruncatedSeries lhs =
            f * (TruncatedSeries::constant(Rat(1), order) -
                 TruncatedSeries::monomial(Rat(1), 1, order) * f);
        TruncatedSeries rhs = TruncatedSeries::constant(Rat(1), order) -
                              TruncatedSeries::monomial(Rat(1), r, order) * f.pow(r);
        ++rep.checks_run;
        long k = first_mismatch(lhs, rhs);
        if (k >= 0) {
            std::ostringstream os;
            os << "first failing order " << k;
            rep.fail("product form", "r=" + std::to_string(r), os.str());
        }
    }

    // The (1 - t - t^r f^r)/(1 - 2t) shape found in print: off by t (f - 1)^2.
    {
        TruncatedSeries lhs =
            f * (TruncatedSeries::constant(Rat(1), order) -
                 TruncatedSeries::monomial(Rat(2), 1, order));
        TruncatedSeries rhs = TruncatedSeries::constant(Rat(1), order) -
                              TruncatedSeries::monomial(Rat(1), 1, order) -
                              TruncatedSeries::monomial(Rat(1), r, order) * f.pow(r);
        long k = first_mismatch(lhs, rhs);
        if (k >= 0) {
            std::ostringstream os;
            os << "published (1-2t) variant diverges at order " << k << " for r=" << r
               << " (differs from the sum form by t(f-1)^2); known erratum";
            rep.notes.push_back(os.str());
        }
    }

    return rep;
}

Int motzkin_peakless(long n) {
    if (n < 0) throw std::invalid_argument("motzkin_peakless: n must be >= 0");
    Int sum(0);
    for (long i = 0; i <= n / 3; ++i)
        sum += binom_int(Int(n - i), static_cast<unsigned long>(2 * i)) * euler::catalan(i);
    return sum;
}

namespace {

TruncatedSeries run_quotient_power(long x, int r, long order) {
    // ((1 - t^r)/(1 - t))^x
    TruncatedSeries base = one_minus_power(r, order) / one_minus_power(1, order);
    return base.pow(x);
}

}  // namespace

TruncatedSeries conjecture_series(long x, long order) {
    TruncatedSeries inner = TruncatedSeries::constant(Rat(1), order) +
                            TruncatedSeries::monomial(Rat(1), 1, order);
    inner = inner * inner + TruncatedSeries::monomial(Rat(4), 3, order);
    TruncatedSeries phi = (TruncatedSeries::constant(Rat(3), order) +
                           TruncatedSeries::monomial(Rat(1), 1, order) - inner.sqrt()) *
                          TruncatedSeries::constant(make_rat(Int(1), Int(2)), order);
    return phi * run_quotient_power(x, 4, order);
}

TruncatedSeries gf_ansatz_series(long x, int r, long order) {
    if (r < 3) throw std::invalid_argument("gf_ansatz_series: r must be >= 3");
    polyseq::PolyFamily fam(polyseq::FamilyKind::P, r);
    std::vector<Rat> phi_coeffs;
    phi_coeffs.reserve(static_cast<size_t>(order) + 1);
    for (long n = 0; n <= order; ++n) phi_coeffs.emplace_back(fam.member(n).eval_int(0));
    TruncatedSeries phi(phi_coeffs, order);
    return phi * run_quotient_power(x, r, order);
}

CheckReport conjecture_check(long order, long gf_order, long x_max) {
    if (order < 3) throw std::invalid_argument("conjecture_check: order must be >= 3");
    CheckReport rep;
    rep.name = "conjecture-r4";
    rep.notes.push_back("verified to order " + std::to_string(order) +
                        "; evidence only, not a proof");

    polyseq::PolyFamily fam(polyseq::FamilyKind::P, 4);

    // (a) alternating peakless Motzkin values in column 0
    for (long n = 3; n <= order; ++n) {
        Int expected = motzkin_peakless(n - 3);
        if (n % 2 != 0) expected = -expected;
        Int actual = fam.member(n).eval_int(0);
        ++rep.checks_run;
        if (actual != expected)
            rep.fail("p_n(0) = (-1)^n M'(n-3)", "n=" + std::to_string(n),
                     "lhs=" + actual.get_str() + " rhs=" + expected.get_str());
    }

    // (b) coefficients of the conjectured generating function; the x = 0
    // column (the sqrt factor itself) is taken to the full order
    for (long x = 0; x <= x_max; ++x) {
        long through = (x == 0) ? order : gf_order;
        TruncatedSeries s = conjecture_series(x, through);
        for (long n = 0; n <= through; ++n) {
            Rat expected(fam.member(n).eval_int(x));
            ++rep.checks_run;
            if (s.coeff(n) != expected) {
                std::ostringstream os;
                os << "n=" << n << " x=" << x;
                rep.fail("[t^n] conjectured GF = p_n(x)", os.str(),
                         "lhs=" + rat_to_string(s.coeff(n)) +
                             " rhs=" + rat_to_string(expected));
            }
        }
    }
    return rep;
}

}  // namespace runpaths::series
