#include "runpaths/paths.hpp"

#include "runpaths/euler.hpp"
#include "runpaths/polyseq.hpp"

namespace runpaths::paths {

namespace {

void require_run_bound(int r, const char* who) {
    if (r < 2) throw std::invalid_argument(std::string(who) + ": r must be >= 2");
}

}  // namespace

Int ballot_avoid_east(long n, long m, int r) {
    require_run_bound(r, "ballot_avoid_east");
    if (n < 0) throw std::invalid_argument("ballot_avoid_east: n must be >= 0");
    if (m == -1) return polyseq::s_poly(n, r).eval_int(-1);
    Rat value = make_rat(Int(m - n + 1), Int(m + 1)) * Rat(euler::euler_coeff(m + 1, n, r));
    return to_int(value);
}

Int ballot_avoid_north(long n, long m, int r) {
    require_run_bound(r, "ballot_avoid_north");
    if (n < 0) throw std::invalid_argument("ballot_avoid_north: n must be >= 0");
    if (m < n) throw std::invalid_argument("ballot_avoid_north: requires m >= n");
    if (m > (static_cast<long>(r) - 1) * (n + 1)) return 0;  // unreachable
    if (m == n) {
        // t_n(n) = binom(n+1, n)_r / (n+1)
        return to_int(make_rat(euler::euler_coeff(n + 1, n, r), Int(n + 1)));
    }
    Rat sum(0);
    for (long i = 0; i <= m - n - 1; ++i) {
        Rat term = make_rat(Int(1), Int(m + 1 - i)) * Rat(euler::euler_coeff(i - m + n, i, r)) *
                   Rat(euler::euler_coeff(m + 1 - i, m - i, r));
        sum += term;
    }
    return to_int(sum);
}

Int sheffer_q(long n, long x, long alpha, int r) {
    require_run_bound(r, "sheffer_q");
    if (n < 0 || alpha < 0) throw std::invalid_argument("sheffer_q: n, alpha must be >= 0");
    for (long i = 0; i <= alpha; ++i)
        if (x + alpha + 1 - i == 0) return polyseq::q_poly(n, alpha, r).eval_int(x);
    Rat sum(0);
    for (long i = 0; i <= alpha; ++i) {
        Rat term = Rat(euler::euler_coeff(i - alpha - 1, i, r)) *
                   make_rat(Int(x + alpha + 1 - n), Int(x + alpha + 1 - i)) *
                   Rat(euler::euler_coeff(x + alpha + 1 - i, n - i, r));
        sum += term;
    }
    return to_int(sum);
}

namespace {

void validate_dyck_point(long x, long y, const char* who) {
    if (x < 0 || y < 0 || y > x)
        throw std::invalid_argument(std::string(who) + ": point not reachable (need 0 <= y <= x)");
    if ((x - y) % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": x and y must have equal parity");
}

}  // namespace

Int dyck_avoid_down(long x, long y, int r) {
    require_run_bound(r, "dyck_avoid_down");
    validate_dyck_point(x, y, "dyck_avoid_down");
    return ballot_avoid_east((x - y) / 2, (x + y) / 2, r);
}

Int dyck_avoid_up(long x, long y, int r) {
    require_run_bound(r, "dyck_avoid_up");
    validate_dyck_point(x, y, "dyck_avoid_up");
    if (x == 0) return 1;
    // every path back to the axis ends with a down step
    if (y == 0) return dyck_avoid_up(x - 1, 1, r);
    return ballot_avoid_north((x - y) / 2, (x + y) / 2, r);
}

}  // namespace runpaths::paths
