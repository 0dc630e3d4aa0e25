#pragma once

#include <stdexcept>
#include <string>

namespace fuzzylap {

/// Malformed arguments: ordering violations, invalid level sets, bad grids.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base of the structured failures a solve can report. kind() is a stable
/// token used in reports.
class SolveError : public std::runtime_error {
public:
    SolveError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Outside the closed-form class: repeated roots, complex roots with a
/// nonzero real part, general quartics.
class UnsupportedProblem : public SolveError {
public:
    explicit UnsupportedProblem(const std::string& what)
        : SolveError("unsupported_problem", what) {}
};

/// The far-boundary elimination is singular (the problem sits on an eigenvalue).
class EigenvalueDegeneracy : public SolveError {
public:
    explicit EigenvalueDegeneracy(const std::string& what)
        : SolveError("eigenvalue_degeneracy", what) {}
};

/// The requested differentiability case does not apply to the coefficients.
class CaseInapplicable : public SolveError {
public:
    explicit CaseInapplicable(const std::string& what)
        : SolveError("case_inapplicable", what) {}
};

}  // namespace fuzzylap
