#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "fuzzylap/errors.hpp"

namespace fuzzylap {

/// Absolute slack used by every level-set invariant check on endpoint arithmetic.
inline constexpr double kLevelSetTolerance = 1e-12;

/// Affine function r -> c0 + c1*r on the membership level r in [0, 1].
struct RFun {
    double c0 = 0.0;
    double c1 = 0.0;

    constexpr double operator()(double r) const noexcept { return c0 + c1 * r; }

    constexpr bool non_decreasing(double tol = kLevelSetTolerance) const noexcept { return c1 >= -tol; }
    constexpr bool non_increasing(double tol = kLevelSetTolerance) const noexcept { return c1 <= tol; }

    static constexpr RFun constant(double v) noexcept { return {v, 0.0}; }

    friend constexpr RFun operator+(RFun a, RFun b) noexcept { return {a.c0 + b.c0, a.c1 + b.c1}; }
    friend constexpr RFun operator-(RFun a, RFun b) noexcept { return {a.c0 - b.c0, a.c1 - b.c1}; }
    friend constexpr RFun operator-(RFun a) noexcept { return {-a.c0, -a.c1}; }
    friend constexpr RFun operator*(double s, RFun a) noexcept { return {s * a.c0, s * a.c1}; }
    friend constexpr RFun operator*(RFun a, double s) noexcept { return s * a; }
    friend constexpr RFun operator/(RFun a, double s) noexcept { return {a.c0 / s, a.c1 / s}; }
    friend constexpr bool operator==(RFun, RFun) = default;
};

/// Fuzzy number in parametric form: lower branch non-decreasing, upper branch
/// non-increasing, lower <= upper on [0, 1]. Both branches are affine in r.
class FuzzyNumber {
public:
    /// Crisp zero.
    constexpr FuzzyNumber() = default;

    /// Throws InvalidInput when the pair is not a valid level set.
    FuzzyNumber(RFun lower, RFun upper) : lower_(lower), upper_(upper) {
        if (auto why = violation(lower, upper)) {
            throw InvalidInput("not a valid fuzzy number: " + *why);
        }
    }

    static FuzzyNumber crisp(double v) { return {RFun::constant(v), RFun::constant(v)}; }

    /// Returns the first violated level-set condition, or nullopt if (lower, upper) is valid.
    static std::optional<std::string> violation(RFun lower, RFun upper, double tol = kLevelSetTolerance) {
        if (!std::isfinite(lower.c0) || !std::isfinite(lower.c1) || !std::isfinite(upper.c0) ||
            !std::isfinite(upper.c1)) {
            return "non-finite branch coefficient";
        }
        if (!lower.non_decreasing(tol)) return "lower branch is decreasing in r";
        if (!upper.non_increasing(tol)) return "upper branch is increasing in r";
        // With both monotonicity conditions, ordering at r = 1 implies ordering on [0, 1].
        if (lower(1.0) > upper(1.0) + tol) return "lower branch exceeds upper branch at r = 1";
        return std::nullopt;
    }

    static bool is_valid(RFun lower, RFun upper, double tol = kLevelSetTolerance) {
        return !violation(lower, upper, tol).has_value();
    }

    constexpr RFun lower() const noexcept { return lower_; }
    constexpr RFun upper() const noexcept { return upper_; }

    constexpr double lower(double r) const noexcept { return lower_(r); }
    constexpr double upper(double r) const noexcept { return upper_(r); }

    bool is_crisp(double tol = kLevelSetTolerance) const noexcept {
        return std::abs(lower_.c1) <= tol && std::abs(upper_.c1) <= tol &&
               std::abs(lower_.c0 - upper_.c0) <= tol;
    }

    friend constexpr bool operator==(const FuzzyNumber&, const FuzzyNumber&) = default;

private:
    RFun lower_{};
    RFun upper_{};
};

/// Triangular number (l, c, r): lower = l + (c - l) alpha, upper = r - (r - c) alpha.
inline FuzzyNumber triangular(double left, double center, double right) {
    if (!(left <= center) || !(center <= right)) {
        throw InvalidInput("triangular number requires left <= center <= right");
    }
    return {RFun{left, center - left}, RFun{right, -(right - center)}};
}

inline FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v) {
    return {u.lower() + v.lower(), u.upper() + v.upper()};
}

inline FuzzyNumber operator+(const FuzzyNumber& u, const FuzzyNumber& v) { return add(u, v); }

/// Scalar multiple; a negative factor swaps the branches.
inline FuzzyNumber scale(double j, const FuzzyNumber& u) {
    if (j >= 0.0) return {j * u.lower(), j * u.upper()};
    return {j * u.upper(), j * u.lower()};
}

inline FuzzyNumber operator*(double j, const FuzzyNumber& u) { return scale(j, u); }

/// Hukuhara difference x (-) y: the z with y + z = x, if it is a fuzzy number.
inline std::optional<FuzzyNumber> h_difference(const FuzzyNumber& x, const FuzzyNumber& y) {
    const RFun lower = x.lower() - y.lower();
    const RFun upper = x.upper() - y.upper();
    if (!FuzzyNumber::is_valid(lower, upper)) return std::nullopt;
    return FuzzyNumber{lower, upper};
}

/// Hausdorff distance sup_r max(|dlower|, |dupper|). Affine branches attain the
/// supremum at r = 0 or r = 1.
inline double hausdorff(const FuzzyNumber& u, const FuzzyNumber& v) {
    const RFun dl = u.lower() - v.lower();
    const RFun du = u.upper() - v.upper();
    return std::max({std::abs(dl(0.0)), std::abs(dl(1.0)), std::abs(du(0.0)), std::abs(du(1.0))});
}

}  // namespace fuzzylap
