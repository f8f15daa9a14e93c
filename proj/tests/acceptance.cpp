// Acceptance gate: runs every criterion at its stated budget and prints one
// pass/fail line per criterion.  Exact arithmetic throughout; zero tolerance.

#include "sbo/suites.hpp"

#include <cstdio>

int main() {
    using sbo::CheckResult;
    struct Criterion {
        const char* label;
        double budget_seconds;
        bool (*body)(std::string&);
    };
    const Criterion criteria[] = {
        {"appendix identity suite", 10.0, sbo::suites::criterion_appendix},
        {"gegenbauer even kernel", 10.0, sbo::suites::criterion_kernel},
        {"f-system zero residual", 60.0, sbo::suites::criterion_residual},
        {"classification via nullspace", 180.0, sbo::suites::criterion_classification},
        {"three-phase solver agreement", 120.0, sbo::suites::criterion_recurrence},
        {"rank-3 operator family", 5.0, sbo::suites::criterion_n1_family},
        {"vector-coefficient formula", 30.0, sbo::suites::criterion_closed_formula},
        {"R/L system equivalence", 10.0, sbo::suites::criterion_bridging},
        {"symbol/operator consistency", 30.0, sbo::suites::criterion_symbol_vs_built},
        {"operator order", 5.0, sbo::suites::criterion_order},
    };

    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        CheckResult r = sbo::run_check(c.label, c.body);
        bool in_budget = r.seconds < c.budget_seconds;
        bool pass = r.pass && in_budget;
        std::printf("criterion %2d %-4s (%6.2f s / %5.0f s)  %s%s%s\n", index,
                    pass ? "PASS" : "FAIL", r.seconds, c.budget_seconds, c.label,
                    r.detail.empty() ? "" : ": ", r.detail.c_str());
        if (!in_budget && r.pass)
            std::printf("              over budget\n");
        failures += pass ? 0 : 1;
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
