#include "runpaths/oracle.hpp"

#include <vector>

namespace runpaths::oracle {

namespace {

// last-step encoding for the walk DP: 0 = none yet, 1 = first kind, 2 = second
constexpr int kNone = 0;

struct WalkTable {
    // ways[a][b][last][run]
    std::vector<Int> ways;
    long a_len, b_len;
    int r;

    WalkTable(long a_max, long b_max, int run_bound)
        : ways(static_cast<size_t>((a_max + 1) * (b_max + 1) * 3 * run_bound), Int(0)),
          a_len(a_max + 1),
          b_len(b_max + 1),
          r(run_bound) {}

    Int& at(long a, long b, int last, int run) {
        size_t idx = static_cast<size_t>(((a * b_len + b) * 3 + last) * r + run);
        return ways[idx];
    }
};

}  // namespace

Int ballot_paths(long n, long m, const RunRestriction& restriction) {
    if (n < 0 || m < 0) throw std::invalid_argument("ballot_paths: negative coordinates");
    if (n + m > kMaxPathSteps)
        throw std::domain_error("ballot_paths: size guard exceeded (n+m > 26)");
    if (m < n) return 0;

    const int r = restriction.r;
    // a = east steps taken, b = north steps taken; last: 1 = east, 2 = north
    WalkTable dp(n, m, r);
    dp.at(0, 0, kNone, 0) = 1;
    for (long steps = 0; steps < n + m; ++steps) {
        for (long a = 0; a <= std::min(n, steps); ++a) {
            long b = steps - a;
            if (b < 0 || b > m || b < a) continue;
            for (int last = 0; last < 3; ++last) {
                for (int run = 0; run < r; ++run) {
                    const Int& w = dp.at(a, b, last, run);
                    if (w == 0) continue;
                    // east step: must keep b >= a+1
                    if (a + 1 <= n && b >= a + 1) {
                        int new_run = (last == 1) ? run + 1 : 1;
                        bool forbidden = (restriction.dir == Dir::East) && new_run >= r;
                        if (!forbidden) dp.at(a + 1, b, 1, std::min(new_run, r - 1)) += w;
                    }
                    // north step
                    if (b + 1 <= m) {
                        int new_run = (last == 2) ? run + 1 : 1;
                        bool forbidden = (restriction.dir == Dir::North) && new_run >= r;
                        if (!forbidden) dp.at(a, b + 1, 2, std::min(new_run, r - 1)) += w;
                    }
                }
            }
        }
    }
    Int total(0);
    for (int last = 0; last < 3; ++last)
        for (int run = 0; run < r; ++run) total += dp.at(n, m, last, run);
    return total;
}

Int dyck_paths(long x, long y, const RunRestriction& restriction) {
    if (x < 0 || y < 0) throw std::invalid_argument("dyck_paths: negative coordinates");
    if (x > kMaxPathSteps) throw std::domain_error("dyck_paths: size guard exceeded (x > 26)");
    if (y > x || ((x - y) % 2) != 0) return 0;

    const int r = restriction.r;
    // u = up steps taken, d = down steps taken; last: 1 = down, 2 = up
    long u_max = (x + y) / 2, d_max = (x - y) / 2;
    WalkTable dp(d_max, u_max, r);
    dp.at(0, 0, kNone, 0) = 1;
    for (long steps = 0; steps < x; ++steps) {
        for (long d = 0; d <= std::min(d_max, steps); ++d) {
            long u = steps - d;
            if (u < 0 || u > u_max || u < d) continue;  // height u-d must stay >= 0
            for (int last = 0; last < 3; ++last) {
                for (int run = 0; run < r; ++run) {
                    const Int& w = dp.at(d, u, last, run);
                    if (w == 0) continue;
                    // down step: height must stay nonnegative
                    if (d + 1 <= d_max && u >= d + 1) {
                        int new_run = (last == 1) ? run + 1 : 1;
                        bool forbidden = (restriction.dir == Dir::East) && new_run >= r;
                        if (!forbidden) dp.at(d + 1, u, 1, std::min(new_run, r - 1)) += w;
                    }
                    // up step
                    if (u + 1 <= u_max) {
                        int new_run = (last == 2) ? run + 1 : 1;
                        bool forbidden = (restriction.dir == Dir::North) && new_run >= r;
                        if (!forbidden) dp.at(d, u + 1, 2, std::min(new_run, r - 1)) += w;
                    }
                }
            }
        }
    }
    Int total(0);
    for (int last = 0; last < 3; ++last)
        for (int run = 0; run < r; ++run) total += dp.at(d_max, u_max, last, run);
    return total;
}

namespace {

// Depth-first enumeration over parts with prefix pruning. The prefix bound is
// c*k (side P) or k+alpha (side Q); the bound applies for k = 1..n-1 and the
// full sum is pinned to the target.
void enumerate_compositions(long k, long n, long prefix, long target, int max_part,
                            long alpha, int c, CompositionSide side, Int& count) {
    if (k == n) {
        if (prefix == target) ++count;
        return;
    }
    long remaining_parts = n - k;
    for (int part = 0; part <= max_part; ++part) {
        long s = prefix + part;
        if (s > target) break;
        if (s + (remaining_parts - 1) * static_cast<long>(max_part) < target) continue;
        if (k + 1 <= n - 1) {
            long bound = (side == CompositionSide::P) ? static_cast<long>(c) * (k + 1)
                                                      : (k + 1) + alpha;
            if (s > bound) break;  // parts only grow the prefix
        }
        enumerate_compositions(k + 1, n, s, target, max_part, alpha, c, side, count);
    }
}

}  // namespace

Int count_restricted_compositions(int c, long n, long alpha, CompositionSide side) {
    if (c < 1) throw std::invalid_argument("count_restricted_compositions: c must be >= 1");
    if (n < 0 || alpha < 0)
        throw std::invalid_argument("count_restricted_compositions: negative argument");
    if (n > kMaxCompositionParts)
        throw std::domain_error("count_restricted_compositions: size guard exceeded");

    long target = (side == CompositionSide::P) ? static_cast<long>(c) * n - alpha : n + alpha;
    if (target < 0) return 0;
    if (n == 0) return target == 0 ? Int(1) : Int(0);
    Int count(0);
    enumerate_compositions(0, n, 0, target, c + 1, alpha, c, side, count);
    return count;
}

Int motzkin_peakless_bruteforce(long n) {
    if (n < 0) throw std::invalid_argument("motzkin_peakless_bruteforce: n must be >= 0");
    if (n > kMaxMotzkinSteps)
        throw std::domain_error("motzkin_peakless_bruteforce: size guard exceeded (n > 24)");

    // ways[h][last], last: 0 = none/h/d (free), 1 = u (next step must be h)
    std::vector<std::vector<Int>> ways(static_cast<size_t>(n) + 1,
                                       std::vector<Int>(2, Int(0)));
    ways[0][0] = 1;
    for (long step = 0; step < n; ++step) {
        std::vector<std::vector<Int>> next(static_cast<size_t>(n) + 1,
                                           std::vector<Int>(2, Int(0)));
        for (long h = 0; h <= n; ++h) {
            for (int last = 0; last < 2; ++last) {
                const Int& w = ways[static_cast<size_t>(h)][last];
                if (w == 0) continue;
                // horizontal step is always allowed
                next[static_cast<size_t>(h)][0] += w;
                if (last == 0) {
                    if (h + 1 <= n) next[static_cast<size_t>(h + 1)][1] += w;  // up
                    if (h - 1 >= 0) next[static_cast<size_t>(h - 1)][0] += w;  // down
                }
            }
        }
        ways = std::move(next);
    }
    return ways[0][0] + ways[0][1];
}

}  // namespace runpaths::oracle
