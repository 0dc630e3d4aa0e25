// Solves the fuzzy Schrodinger step problem under every differentiability case
// and prints the shooting constants and level-set validity per case.

#include <cstdio>

#include "fuzzylap/fuzzylap.hpp"

int main() {
    using namespace fuzzylap;

    FuzzyBVP prob;
    prob.a = 1.0;   // hbar^2 / 2m
    prob.c = -1.0;  // -E
    prob.potential_height = 0.0;
    prob.L = 1.0;
    prob.bc0 = triangular(1.0, 2.0, 3.0);
    prob.bcL = triangular(4.0, 5.0, 6.0);

    for (const CaseOutcome& oc : enumerate_cases(prob)) {
        std::printf("case (%s): ", std::string(to_string(oc.diff_case)).c_str());
        if (!oc.ok()) {
            std::printf("%s\n", oc.error_message.c_str());
            continue;
        }
        const auto k = oc.solution->shooting_constants();
        std::printf("first constant %.6f%+.6f r, second %.6f%+.6f r, valid level set: %s\n", k.first.c0, k.first.c1,
                    k.second.c0, k.second.c1, oc.report->valid_level_set() ? "yes" : "no");
        for (double x : {0.0, 0.5, 1.0}) {
            std::printf("    x = %.1f  r=0: [%.6f, %.6f]  r=1: [%.6f, %.6f]\n", x, oc.solution->lower(x, 0.0),
                        oc.solution->upper(x, 0.0), oc.solution->lower(x, 1.0), oc.solution->upper(x, 1.0));
        }
    }
}
