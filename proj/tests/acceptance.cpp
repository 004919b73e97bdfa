// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Bounds and tolerances are pinned here; everything is exact integer/rational
// equality, so "tolerance" only ever means equal-or-fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "runpaths/euler.hpp"
#include "runpaths/fixtures.hpp"
#include "runpaths/verify.hpp"

using namespace runpaths;

namespace {

struct Criterion {
    std::string label;
    double time_limit_seconds;  // 0 = no limit stated
    std::function<CheckReport()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"1 table reproduction (7 published tables, 1 whitelisted erratum)", 1.0,
                        [] { return fixtures::check_table_reproduction(); }});

    criteria.push_back({"2 closed form = recurrence = brute force (n+m <= 22, r in 2..5)", 120.0,
                        [] { return verify::suite_oracle(22, {2, 3, 4, 5}); }});

    criteria.push_back({"3 Euler identities 1-5 + large-r reduction (n <= 12, r in 2..6)", 0,
                        [] { return euler::verify_identities(12, 60, 6); }});

    criteria.push_back({"4 composition lemma P=Q and table bridges (c in 1..3, r in 3..5)", 0,
                        [] { return verify::suite_bridge(10, {3, 4, 5}); }});

    criteria.push_back({"5 generating functions to order 64 (m <= 8, r in 2..5)", 0,
                        [] { return verify::suite_genfunc(64, 8, {2, 3, 4, 5}); }});

    criteria.push_back({"6 conjecture evidence (order 64, GF window x <= 16, n <= 40)", 60.0,
                        [] { return verify::suite_conjecture(64, 40, 16, 20); }});

    criteria.push_back({"7 Sheffer consequences (n <= 12, 14 points) + factor forms", 0, [] {
                            CheckReport rep =
                                verify::check_sheffer_consequences(12, {3, 4, 5});
                            rep.merge(verify::check_genfunc_factor_forms({2, 3, 4, 5, 6}));
                            return rep;
                        }});

    int failed = 0;
    for (const Criterion& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        CheckReport rep = criterion.run();
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        bool ok = rep.ok();
        bool in_time = criterion.time_limit_seconds == 0 || elapsed <= criterion.time_limit_seconds;
        std::printf("criterion %s: %s (%ld checks, %.2fs%s)\n", criterion.label.c_str(),
                    ok && in_time ? "PASS" : "FAIL", rep.checks_run, elapsed,
                    in_time ? "" : ", over time limit");
        for (const auto& f : rep.failures)
            std::printf("    %s [%s] %s\n", f.check.c_str(), f.args.c_str(), f.detail.c_str());
        for (const auto& n : rep.notes) std::printf("    note: %s\n", n.c_str());
        if (!ok || !in_time) ++failed;
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    else std::printf("all acceptance criteria passed\n");
    return failed;
}
