#pragma once

#include <string>
#include <vector>

namespace runpaths {

// A single failed check, with enough context to reproduce it by hand.
struct CheckFailure {
    std::string check;   // which identity / comparison failed
    std::string args;    // instantiation, e.g. "n=3 k=8 r=4"
    std::string detail;  // expected vs actual
};

// Outcome of a verification suite. Checks either pass silently (counted) or
// produce a CheckFailure. Notes carry informational findings (known errata)
// that do not count as failures.
struct CheckReport {
    std::string name;
    long checks_run = 0;
    std::vector<CheckFailure> failures;
    std::vector<std::string> notes;

    bool ok() const { return failures.empty(); }

    void fail(std::string check, std::string args, std::string detail) {
        failures.push_back({std::move(check), std::move(args), std::move(detail)});
    }

    void merge(const CheckReport& other) {
        checks_run += other.checks_run;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }
};

}  // namespace runpaths
