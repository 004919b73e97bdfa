#include "runpaths/verify.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "runpaths/euler.hpp"
#include "runpaths/fixtures.hpp"
#include "runpaths/oracle.hpp"
#include "runpaths/paths.hpp"
#include "runpaths/polyseq.hpp"
#include "runpaths/series.hpp"
#include "runpaths/tables.hpp"

namespace runpaths::verify {

namespace {

using polyseq::Polynomial;

std::string show(const Int& a, const Int& b) {
    return "lhs=" + a.get_str() + " rhs=" + b.get_str();
}

}  // namespace

// r t^r (1 - t) + (1 - t^r)(1 - 2t) and its sign-flipped printed twin,
// r t^r (1 - t) - (1 - t^r)(2t - 1), as polynomials in t.
CheckReport check_genfunc_factor_forms(const std::vector<int>& r_set) {
    CheckReport rep;
    rep.name = "genfunc-factor-forms";
    for (int r : r_set) {
        std::vector<Rat> tr(static_cast<size_t>(r) + 1, Rat(0));
        tr[static_cast<size_t>(r)] = Rat(r);
        Polynomial rtr(tr);                                        // r t^r
        Polynomial one_minus_t(std::vector<Rat>{Rat(1), Rat(-1)});  // 1 - t
        std::vector<Rat> trc(static_cast<size_t>(r) + 1, Rat(0));
        trc[0] = Rat(1);
        trc[static_cast<size_t>(r)] = Rat(-1);
        Polynomial one_minus_tr(trc);                               // 1 - t^r
        Polynomial one_minus_2t(std::vector<Rat>{Rat(1), Rat(-2)});
        Polynomial two_t_minus_1(std::vector<Rat>{Rat(-1), Rat(2)});

        Polynomial form_a = rtr * one_minus_t + one_minus_tr * one_minus_2t;
        Polynomial form_b = rtr * one_minus_t - one_minus_tr * two_t_minus_1;
        ++rep.checks_run;
        if (!(form_a == form_b))
            rep.fail("factor forms differ", "r=" + std::to_string(r),
                     "a=" + form_a.to_string() + " b=" + form_b.to_string());
    }
    return rep;
}

CheckReport check_sheffer_consequences(long n_max, const std::vector<int>& r_set) {
    CheckReport rep;
    rep.name = "sheffer-consequences";

    // 14 integer evaluation points for the Sheffer binomial theorem
    std::vector<std::pair<long, long>> points;
    for (long x = -3; x <= 3; ++x)
        for (long y = 0; y <= 1; ++y) points.emplace_back(x, y);

    for (int r : r_set) {
        rep.merge(polyseq::sheffer_binomial_check(polyseq::FamilyKind::S, r, -1, n_max, points));
        rep.merge(polyseq::sheffer_binomial_check(polyseq::FamilyKind::Q, r, 2, n_max, points));
        rep.merge(polyseq::operator_identity_check(r, n_max));
        rep.merge(polyseq::abelization_check(r, std::min(n_max, 8L), 1, 3, -2, 2));
    }
    return rep;
}

CheckReport suite_identities(long n_max, const std::vector<int>& r_set) {
    CheckReport rep;
    rep.name = "identities";
    int r_max = *std::max_element(r_set.begin(), r_set.end());
    rep.merge(euler::verify_identities(n_max, n_max * (r_max - 1), r_max));
    rep.merge(check_sheffer_consequences(std::min(n_max, 12L), r_set));
    rep.merge(check_genfunc_factor_forms(r_set));
    return rep;
}

CheckReport suite_tables() { return fixtures::check_table_reproduction(); }

CheckReport suite_bridge(long n_max, const std::vector<int>& r_set) {
    CheckReport rep;
    rep.name = "bridge";

    // restricted-composition lemma P = Q
    for (int c = 1; c <= 3; ++c) {
        for (long n = 0; n <= std::min(n_max, 10L); ++n) {
            for (long alpha = 0; alpha <= 6; ++alpha) {
                Int p = oracle::count_restricted_compositions(c, n, alpha,
                                                              oracle::CompositionSide::P);
                Int q = oracle::count_restricted_compositions(c, n, alpha,
                                                              oracle::CompositionSide::Q);
                ++rep.checks_run;
                if (p != q) {
                    std::ostringstream os;
                    os << "c=" << c << " n=" << n << " alpha=" << alpha;
                    rep.fail("P = Q", os.str(), show(p, q));
                }
            }
        }
    }

    for (int r : r_set) {
        if (r < 3) continue;  // the rotated table needs a real staircase
        const int c = r - 2;
        long n_cap = std::min(n_max, 8L);
        long p_cols = c * (n_cap + 1) + 1;
        tables::CountTable p_table = tables::build_p_table(p_cols, n_cap, r);

        for (long alpha = 0; alpha <= 4; ++alpha) {
            tables::CountTable q_table = tables::build_q_table(n_cap + alpha + 1, n_cap, alpha, r);
            long n_lo = (alpha + c - 1) / c;  // ceil(alpha / (r-2))
            for (long n = n_lo; n <= n_cap; ++n) {
                Int via_q = *q_table.at(n + alpha, n);
                Int via_p = *p_table.at(c * n - alpha, n);
                Int compositions_p = oracle::count_restricted_compositions(
                    c, n, alpha, oracle::CompositionSide::P);
                Int compositions_q = oracle::count_restricted_compositions(
                    c, n, alpha, oracle::CompositionSide::Q);
                std::ostringstream os;
                os << "r=" << r << " alpha=" << alpha << " n=" << n;
                ++rep.checks_run;
                if (via_q != via_p)
                    rep.fail("q_{n+a}(n;a) = p_{(r-2)n-a}(n)", os.str(), show(via_q, via_p));
                ++rep.checks_run;
                if (compositions_p != via_p)
                    rep.fail("composition count = p cell", os.str(), show(compositions_p, via_p));
                ++rep.checks_run;
                if (compositions_q != via_q)
                    rep.fail("composition count = q cell", os.str(), show(compositions_q, via_q));
            }
        }

        // rotation: p_n(m) = t'_{m-1}((r-1)m - n) on the combinatorial wedge
        // n <= (r-2)(m+1); the extension below the staircase is polynomial,
        // not a path count
        long m_cap = std::min(n_max, 8L);
        tables::CountTable tprime =
            tables::build_tprime_table(m_cap, (static_cast<long>(r) - 1) * (m_cap + 1), r);
        tables::CountTable p_wide =
            tables::build_p_table((static_cast<long>(r) - 1) * m_cap, m_cap, r);
        for (long m = 1; m <= m_cap; ++m) {
            long wedge = std::min((static_cast<long>(r) - 1) * m,
                                  (static_cast<long>(r) - 2) * (m + 1));
            for (long n = 0; n <= wedge; ++n) {
                Int lhs = *p_wide.at(n, m);
                Int rhs = *tprime.at(m - 1, (static_cast<long>(r) - 1) * m - n);
                std::ostringstream os;
                os << "r=" << r << " n=" << n << " m=" << m;
                ++rep.checks_run;
                if (lhs != rhs) rep.fail("rotation identity", os.str(), show(lhs, rhs));
            }
        }

        // three-way bridge: t_n(m) = p_{(r-1)(n+1)-m}(n+1) = q_m(n+1; m-1-n)
        polyseq::PolyFamily p_fam(polyseq::FamilyKind::P, r);
        for (long n = 0; n <= std::min(n_max, 6L); ++n) {
            for (long m = n + 1; m <= (static_cast<long>(r) - 1) * (n + 1); ++m) {
                Int t_val = paths::ballot_avoid_north(n, m, r);
                Int p_val = p_fam.member((static_cast<long>(r) - 1) * (n + 1) - m)
                                .eval_int(n + 1);
                Int q_val = paths::sheffer_q(m, n + 1, m - 1 - n, r);
                std::ostringstream os;
                os << "r=" << r << " n=" << n << " m=" << m;
                ++rep.checks_run;
                if (t_val != p_val) rep.fail("t = p bridge", os.str(), show(t_val, p_val));
                ++rep.checks_run;
                if (t_val != q_val) rep.fail("t = q bridge", os.str(), show(t_val, q_val));
            }
        }
    }
    return rep;
}

CheckReport suite_oracle(long max_sum, const std::vector<int>& r_set) {
    CheckReport rep;
    rep.name = "oracle";
    for (int r : r_set) {
        tables::CountTable s_table = tables::build_s_table(max_sum, 0, max_sum, r);
        tables::CountTable t_table = tables::build_t_table(max_sum, max_sum, r);
        for (long n = 0; 2 * n <= max_sum; ++n) {
            for (long m = n; n + m <= max_sum; ++m) {
                std::ostringstream os;
                os << "r=" << r << " n=" << n << " m=" << m;

                Int east_formula = paths::ballot_avoid_east(n, m, r);
                Int east_table = *s_table.at(n, m);
                Int east_brute = oracle::ballot_paths(n, m, RunRestriction(Dir::East, r));
                ++rep.checks_run;
                if (east_formula != east_table)
                    rep.fail("east formula = s table", os.str(), show(east_formula, east_table));
                ++rep.checks_run;
                if (east_formula != east_brute)
                    rep.fail("east formula = brute force", os.str(),
                             show(east_formula, east_brute));

                Int north_formula = paths::ballot_avoid_north(n, m, r);
                Int north_table = *t_table.at(n, m);
                Int north_brute = oracle::ballot_paths(n, m, RunRestriction(Dir::North, r));
                ++rep.checks_run;
                if (north_formula != north_table)
                    rep.fail("north formula = t table", os.str(),
                             show(north_formula, north_table));
                ++rep.checks_run;
                if (north_formula != north_brute)
                    rep.fail("north formula = brute force", os.str(),
                             show(north_formula, north_brute));

                // same points in Dyck coordinates, against the Dyck enumerator
                long x = n + m, y = m - n;
                Int down = paths::dyck_avoid_down(x, y, r);
                Int down_brute = oracle::dyck_paths(x, y, RunRestriction(Dir::East, r));
                ++rep.checks_run;
                if (down != east_formula || down != down_brute)
                    rep.fail("down transform", os.str(), show(down, down_brute));
                Int up = paths::dyck_avoid_up(x, y, r);
                Int up_brute = oracle::dyck_paths(x, y, RunRestriction(Dir::North, r));
                ++rep.checks_run;
                if (up != north_formula || up != up_brute)
                    rep.fail("up transform", os.str(), show(up, up_brute));

                if (m == n) {
                    ++rep.checks_run;
                    if (east_formula != north_formula)
                        rep.fail("diagonal equality", os.str(),
                                 show(east_formula, north_formula));
                }
            }
        }
    }
    return rep;
}

CheckReport suite_genfunc(long order, long m_max, const std::vector<int>& r_set) {
    CheckReport rep;
    rep.name = "generating-functions";
    for (int r : r_set) {
        for (long m = 0; m <= m_max; ++m) {
            series::TruncatedSeries gf = series::gen_func_down(m, r, order);
            for (long n = 0; n <= order; ++n) {
                Rat expected(paths::ballot_avoid_east(n, m, r));
                ++rep.checks_run;
                if (gf.coeff(n) != expected) {
                    std::ostringstream os;
                    os << "r=" << r << " m=" << m << " n=" << n;
                    rep.fail("gen_func_down coefficient", os.str(),
                             "lhs=" + rat_to_string(gf.coeff(n)) +
                                 " rhs=" + rat_to_string(expected));
                }
            }
        }
        rep.merge(series::dyck_gf_functional_check(r, order));
    }
    return rep;
}

CheckReport suite_conjecture(long order, long gf_order, long x_max, long brute_max) {
    CheckReport rep;
    rep.name = "conjecture";
    rep.merge(series::conjecture_check(order, gf_order, x_max));

    // peakless Motzkin numbers: closed form vs direct enumeration vs the
    // published head of the sequence
    static const long head[] = {1, 1, 1, 2, 4, 7, 13, 26, 52, 104, 212, 438, 910};
    for (long n = 0; n <= brute_max; ++n) {
        Int closed = series::motzkin_peakless(n);
        Int brute = oracle::motzkin_peakless_bruteforce(n);
        ++rep.checks_run;
        if (closed != brute)
            rep.fail("peakless Motzkin closed form = enumeration", "n=" + std::to_string(n),
                     show(closed, brute));
        if (n < static_cast<long>(std::size(head))) {
            ++rep.checks_run;
            if (closed != head[n])
                rep.fail("peakless Motzkin = published values", "n=" + std::to_string(n),
                         show(closed, Int(head[n])));
        }
    }

    // p_7 against its published factored expansion
    {
        Polynomial inner(std::vector<Rat>{Rat(6720), Rat(-2340), Rat(-38), Rat(426), Rat(247),
                                          Rat(24), Rat(1)});
        Polynomial printed = inner * Polynomial(std::vector<Rat>{Rat(-3), Rat(1)}) *
                             make_rat(Int(1), factorial(7));
        Polynomial computed = polyseq::p_poly(7, 4);
        ++rep.checks_run;
        if (!(printed == computed))
            rep.fail("p_7 printed expansion", "r=4",
                     "printed=" + printed.to_string() + " computed=" + computed.to_string());
    }
    return rep;
}

}  // namespace runpaths::verify
