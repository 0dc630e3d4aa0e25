#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzylap/solver.hpp"
#include "fuzzylap/validate.hpp"

namespace fuzzylap {

/// Result of one differentiability case: either a solution with its validity
/// report, or the structured reason it failed.
struct CaseOutcome {
    DiffCase diff_case = DiffCase::Case11;
    std::optional<FuzzySolution> solution;
    std::optional<ValidityReport> report;
    std::string error_kind;
    std::string error_message;

    bool ok() const noexcept { return solution.has_value(); }
};

struct EnumerateOptions {
    std::size_t x_count = 101;
    std::size_t r_count = 11;
    /// Finite-difference intervals for the oracle cross-check; 0 disables it.
    std::size_t oracle_intervals = 0;
};

inline CaseOutcome solve_case(const FuzzyBVP& prob, DiffCase dc, const EnumerateOptions& opts = {}) {
    CaseOutcome out;
    out.diff_case = dc;
    try {
        FuzzySolution sol = solve(prob.with_case(dc));
        ValidityReport rep = check_level_set(sol, opts.x_count, opts.r_count);
        if (opts.oracle_intervals > 0) {
            try {
                attach_oracle(rep, sol, opts.oracle_intervals);
            } catch (const EigenvalueDegeneracy&) {
                // the closed form exists; only the discrete cross-check is singular
            }
        }
        out.solution = std::move(sol);
        out.report = rep;
    } catch (const SolveError& e) {
        out.error_kind = e.kind();
        out.error_message = e.what();
    } catch (const InvalidInput& e) {
        out.error_kind = "invalid_input";
        out.error_message = e.what();
    }
    return out;
}

/// Runs every differentiability case on the same data. Never throws for solver
/// failures; they are captured per case. Results are ordered 11, 22, 12, 21.
inline std::vector<CaseOutcome> enumerate_cases(const FuzzyBVP& prob, const EnumerateOptions& opts = {}) {
    std::vector<CaseOutcome> out;
    out.reserve(kAllCases.size());
    for (DiffCase dc : kAllCases) out.push_back(solve_case(prob, dc, opts));
    return out;
}

}  // namespace fuzzylap
