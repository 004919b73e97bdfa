#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "runpaths/euler.hpp"
#include "runpaths/oracle.hpp"
#include "runpaths/paths.hpp"
#include "runpaths/polyseq.hpp"

using namespace runpaths;
using paths::ballot_avoid_east;
using paths::ballot_avoid_north;
using paths::dyck_avoid_down;
using paths::dyck_avoid_up;
using paths::sheffer_q;

TEST_CASE("east-run counts match the published s table") {
    CHECK(ballot_avoid_east(4, 4, 4) == 13);
    CHECK(ballot_avoid_east(2, 7, 4) == 27);
    CHECK(ballot_avoid_east(7, 7, 4) == 309);
    // polynomial extension region
    CHECK(ballot_avoid_east(6, 4, 4) == -27);
    CHECK(ballot_avoid_east(8, 6, 4) == -222);
    // zeros next to the diagonal
    for (long n = 1; n <= 9; ++n) CHECK(ballot_avoid_east(n, n - 1, 4) == 0);
    // the m = -1 row goes through the polynomial route
    CHECK(ballot_avoid_east(5, -1, 4) == -1);
    CHECK(ballot_avoid_east(4, -1, 4) == 3);
    CHECK(ballot_avoid_east(0, -1, 4) == 1);
}

TEST_CASE("north-run counts match the published t table") {
    CHECK(ballot_avoid_north(2, 5, 4) == 10);
    CHECK(ballot_avoid_north(6, 6, 4) == 104);
    CHECK(ballot_avoid_north(3, 9, 4) == 19);
    CHECK(ballot_avoid_north(7, 8, 4) == 939);
    CHECK(ballot_avoid_north(3, 5, 4) == 23);
    // the single staircase path and the empty region above it
    for (int r : {2, 3, 4, 5})
        for (long n = 1; n <= 5; ++n) {
            CHECK(ballot_avoid_north(n - 1, (r - 1) * n, r) == 1);
            CHECK(ballot_avoid_north(n - 1, (r - 1) * n + 1, r) == 0);
            CHECK(ballot_avoid_north(n - 1, (r - 1) * n + 5, r) == 0);
        }
    CHECK_THROWS_AS((void)ballot_avoid_north(3, 2, 4), std::invalid_argument);
}

TEST_CASE("diagonal equality of the two problems") {
    for (int r : {2, 3, 4, 5})
        for (long n = 0; n <= 10; ++n)
            CHECK(ballot_avoid_east(n, n, r) == ballot_avoid_north(n, n, r));
}

TEST_CASE("saturation: a long run bound leaves Catalan counts") {
    for (long n = 0; n <= 9; ++n)
        CHECK(ballot_avoid_east(n, n, static_cast<int>(n) + 2) == euler::catalan(n));
}

TEST_CASE("r=2 reduction to ballot numbers") {
    for (long n = 0; n <= 8; ++n)
        for (long m = n; m <= 10; ++m) {
            Rat expected = make_rat(Int(m - n + 1), Int(m + 1)) *
                           Rat(binom_int(Int(m + 1), static_cast<unsigned long>(n)));
            CHECK(Rat(ballot_avoid_east(n, m, 2)) == expected);
        }
}

TEST_CASE("sheffer_q values") {
    CHECK(sheffer_q(7, 5, 2, 4) == 101);
    CHECK(sheffer_q(2, 2, 2, 4) == 3);
    CHECK(sheffer_q(8, 4, 2, 4) == -70);
    // stated zeros: q_n(n - alpha - 1) = 0 for n > alpha
    for (long alpha = 0; alpha <= 3; ++alpha)
        for (long n = alpha + 1; n <= 9; ++n) CHECK(sheffer_q(n, n - alpha - 1, alpha, 4) == 0);
    // singular denominator routes through the polynomial and still agrees
    // with neighboring evaluations' family
    CHECK(sheffer_q(3, -1, 2, 4) == polyseq::q_poly(3, 2, 4).eval_int(-1));
    CHECK(sheffer_q(3, -3, 2, 4) == polyseq::q_poly(3, 2, 4).eval_int(-3));
}

TEST_CASE("dyck counts against the published tables") {
    CHECK(dyck_avoid_down(13, 7, 4) == 208);
    CHECK(dyck_avoid_down(12, 0, 4) == 104);
    CHECK(dyck_avoid_down(12, 4, 4) == 270);
    CHECK(dyck_avoid_down(0, 0, 4) == 1);
    CHECK(dyck_avoid_up(13, 7, 4) == 10);
    CHECK(dyck_avoid_up(11, 7, 4) == 1);
    CHECK(dyck_avoid_up(12, 0, 4) == 104);
    CHECK(dyck_avoid_up(0, 0, 4) == 1);
}

TEST_CASE("dyck preconditions") {
    CHECK_THROWS_AS((void)dyck_avoid_down(1, 0, 4), std::invalid_argument);  // parity
    CHECK_THROWS_AS((void)dyck_avoid_up(3, 5, 4), std::invalid_argument);    // y > x
    CHECK_THROWS_AS((void)dyck_avoid_down(4, -2, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)dyck_avoid_down(4, 2, 1), std::invalid_argument);
}

TEST_CASE("run bound below 2 is rejected everywhere") {
    CHECK_THROWS_AS((void)ballot_avoid_east(2, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)ballot_avoid_north(2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)sheffer_q(2, 3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)ballot_avoid_east(-1, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)sheffer_q(-1, 3, 1, 4), std::invalid_argument);
}

TEST_CASE("both patterns agree on the axis") {
    for (int r : {2, 3, 4, 5})
        for (long x = 0; x <= 16; x += 2)
            CHECK(dyck_avoid_up(x, 0, r) == dyck_avoid_down(x, 0, r));
}

TEST_CASE("transform consistency") {
    for (int r : {2, 3, 4}) {
        for (long x = 0; x <= 14; ++x) {
            for (long y = x % 2; y <= x; y += 2) {
                long n = (x - y) / 2, m = (x + y) / 2;
                CHECK(dyck_avoid_down(x, y, r) == ballot_avoid_east(n, m, r));
                if (y > 0) CHECK(dyck_avoid_up(x, y, r) == ballot_avoid_north(n, m, r));
            }
            if (x % 2 == 0 && x > 0)
                CHECK(dyck_avoid_up(x, 0, r) == dyck_avoid_up(x - 1, 1, r));
        }
    }
}

TEST_CASE("closed forms agree with brute force") {
    for (int r : {2, 3, 4, 5}) {
        for (long n = 0; n <= 6; ++n) {
            for (long m = n; n + m <= 14; ++m) {
                CHECK(ballot_avoid_east(n, m, r) ==
                      oracle::ballot_paths(n, m, RunRestriction(Dir::East, r)));
                CHECK(ballot_avoid_north(n, m, r) ==
                      oracle::ballot_paths(n, m, RunRestriction(Dir::North, r)));
            }
        }
    }
}

TEST_CASE("three-way bridge for the north counts") {
    for (int r : {3, 4, 5}) {
        polyseq::PolyFamily p_fam(polyseq::FamilyKind::P, r);
        for (long n = 0; n <= 4; ++n)
            for (long m = n + 1; m <= (r - 1) * (n + 1); ++m) {
                Int t_val = ballot_avoid_north(n, m, r);
                CHECK(t_val == p_fam.member((r - 1) * (n + 1) - m).eval_int(n + 1));
                CHECK(t_val == sheffer_q(m, n + 1, m - 1 - n, r));
            }
    }
}
