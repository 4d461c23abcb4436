#pragma once

// Acceptance suite: one check per numbered criterion, each returning a
// pass/fail line. Shared by the acceptance test binary and `selftest`.

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace univalence {

struct AcceptanceResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceCheck {
    int id;
    std::string title;
    std::function<AcceptanceResult()> run;
};

std::vector<AcceptanceCheck> acceptance_checks();

/// Criteria whose stated relation is false for the library's definitions; they
/// are run and reported like the others.
const std::vector<int> &known_defect_criteria();

/// Runs every check (or only those in ids), printing one line per criterion.
std::vector<AcceptanceResult> run_acceptance(std::ostream &out, const std::vector<int> &ids = {});

std::string format_result_line(const AcceptanceResult &r);

} // namespace univalence
