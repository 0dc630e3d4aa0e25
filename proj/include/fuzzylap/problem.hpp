#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "fuzzylap/errors.hpp"
#include "fuzzylap/fuzzy_number.hpp"

namespace fuzzylap {

/// Differentiability case (m, n): which of (i)/(ii) applies to the first and
/// second derivative. (1,1) and (2,2) keep the branches uncoupled; (1,2) and
/// (2,1) couple them.
enum class DiffCase { Case11, Case22, Case12, Case21 };

inline constexpr std::array<DiffCase, 4> kAllCases{DiffCase::Case11, DiffCase::Case22, DiffCase::Case12,
                                                   DiffCase::Case21};

constexpr std::string_view to_string(DiffCase c) noexcept {
    switch (c) {
        case DiffCase::Case11: return "11";
        case DiffCase::Case22: return "22";
        case DiffCase::Case12: return "12";
        case DiffCase::Case21: return "21";
    }
    return "?";
}

inline std::optional<DiffCase> parse_case(std::string_view s) {
    for (DiffCase c : kAllCases)
        if (s == to_string(c)) return c;
    return std::nullopt;
}

constexpr bool is_coupled(DiffCase c) noexcept { return c == DiffCase::Case12 || c == DiffCase::Case21; }

/// True when the first derivative is (ii)-differentiable, i.e. the fuzzy
/// derivative's lower endpoint is the upper branch's slope.
constexpr bool first_derivative_swapped(DiffCase c) noexcept { return c == DiffCase::Case22 || c == DiffCase::Case21; }

/// a y'' + b y' + c y = 0 on [0, L] with fuzzy values at both ends.
///
/// potential_height models a step potential in the mixed cases: for (1,2) and
/// (2,1) the zero-order coefficient is c + potential_height. For the
/// Schrodinger step (hbar^2/2m) u'' + V u = E u this gives a = hbar^2/2m,
/// c = -E and potential_height = V.
struct FuzzyBVP {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double potential_height = 0.0;
    double L = 1.0;
    FuzzyNumber bc0{};
    FuzzyNumber bcL{};
    DiffCase diff_case = DiffCase::Case11;

    /// Zero-order coefficient seen by the selected case.
    double zero_order() const noexcept { return is_coupled(diff_case) ? c + potential_height : c; }

    FuzzyBVP with_case(DiffCase dc) const {
        FuzzyBVP p = *this;
        p.diff_case = dc;
        return p;
    }

    void validate() const {
        if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(potential_height))
            throw InvalidInput("ODE coefficients must be finite");
        if (a == 0.0) throw InvalidInput("coefficient a of y'' must be nonzero");
        if (!(L > 0.0) || !std::isfinite(L)) throw InvalidInput("domain length L must be positive and finite");
        if (auto why = FuzzyNumber::violation(bc0.lower(), bc0.upper())) throw InvalidInput("bc0: " + *why);
        if (auto why = FuzzyNumber::violation(bcL.lower(), bcL.upper())) throw InvalidInput("bcL: " + *why);
    }

    friend bool operator==(const FuzzyBVP&, const FuzzyBVP&) = default;
};

}  // namespace fuzzylap
