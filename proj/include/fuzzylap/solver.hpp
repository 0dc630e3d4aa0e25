#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzylap/closed_form.hpp"
#include "fuzzylap/errors.hpp"
#include "fuzzylap/fuzzy_number.hpp"
#include "fuzzylap/laplace.hpp"
#include "fuzzylap/problem.hpp"

namespace fuzzylap {

/// Scalar quantities that multiply a transform numerator. The initial values are
/// known from bc0; the slopes y'(0) of each branch are the unknown constants
/// eliminated with the far boundary condition.
enum class Source { InitialLower, InitialUpper, SlopeLower, SlopeUpper };

constexpr std::string_view to_string(Source s) noexcept {
    switch (s) {
        case Source::InitialLower: return "lower(0)";
        case Source::InitialUpper: return "upper(0)";
        case Source::SlopeLower: return "lower'(0)";
        case Source::SlopeUpper: return "upper'(0)";
    }
    return "?";
}

/// Transform of one branch: l[y](p) = sum_s value(s) * numerator_s(p) / denominator(p).
struct TransformEquation {
    Polynomial denominator;
    std::vector<std::pair<Source, Polynomial>> numerators;
};

struct BranchTransforms {
    TransformEquation lower;
    TransformEquation upper;
};

/// Inverse transform of each source term of a branch.
using InvertedBranch = std::vector<std::pair<Source, ClosedForm>>;

/// Shooting constants in the order (lower, upper) of the fuzzy derivative y'(0).
/// For (1,x) cases this is (lower'(0), upper'(0)); a (ii)-differentiable first
/// derivative swaps them.
struct ShootingConstants {
    RFun first;
    RFun second;
};

struct FuzzySolution {
    RClosedForm lower;
    RClosedForm upper;
    DiffCase diff_case = DiffCase::Case11;
    FuzzyBVP problem;
    RFun lower_slope;  ///< lower'(0, r)
    RFun upper_slope;  ///< upper'(0, r)

    double lower_at(double x, double r) const noexcept { return lower(x, r); }
    double upper_at(double x, double r) const noexcept { return upper(x, r); }

    /// F1, F2 for the uncoupled cases; H1, H2 for the coupled ones.
    ShootingConstants shooting_constants() const noexcept {
        if (first_derivative_swapped(diff_case)) return {upper_slope, lower_slope};
        return {lower_slope, upper_slope};
    }
};

/// Laplace-transformed boundary problem with the unknown slopes kept symbolic.
///
/// Uncoupled cases: (a p^2 + b p + c) l[y] = (a p + b) y(0) + a y'(0) per branch.
/// Coupled cases need b = 0 and kappa = -(c + potential_height)/a > 0; the pair
///   p^2 l[lo] - kappa l[up] = p lo(0) + lo'(0),  p^2 l[up] - kappa l[lo] = p up(0) + up'(0)
/// is solved for each branch over the biquadratic denominator p^4 - kappa^2.
inline BranchTransforms transform_bvp(const FuzzyBVP& prob) {
    prob.validate();
    const double a = prob.a, b = prob.b;
    if (!is_coupled(prob.diff_case)) {
        const double c = prob.zero_order();
        const Polynomial den{c, b, a};
        return {
            {den, {{Source::InitialLower, Polynomial{b, a}}, {Source::SlopeLower, Polynomial{a}}}},
            {den, {{Source::InitialUpper, Polynomial{b, a}}, {Source::SlopeUpper, Polynomial{a}}}},
        };
    }
    if (b != 0.0) {
        throw CaseInapplicable("case (" + std::string(to_string(prob.diff_case)) +
                               ") requires b = 0; use case 11 or 22 for problems with a first-derivative term");
    }
    const double kappa = -prob.zero_order() / a;
    if (!(kappa > 0.0)) {
        throw CaseInapplicable("case (" + std::string(to_string(prob.diff_case)) +
                               ") requires -(c + potential_height)/a > 0; use case 11 or 22");
    }
    const Polynomial den{-kappa * kappa, 0.0, 0.0, 0.0, 1.0};
    const Polynomial cube{0.0, 0.0, 0.0, 1.0}, square{0.0, 0.0, 1.0}, cross_initial{0.0, kappa}, cross_slope{kappa};
    return {
        {den,
         {{Source::InitialLower, cube},
          {Source::SlopeLower, square},
          {Source::InitialUpper, cross_initial},
          {Source::SlopeUpper, cross_slope}}},
        {den,
         {{Source::InitialUpper, cube},
          {Source::SlopeUpper, square},
          {Source::InitialLower, cross_initial},
          {Source::SlopeLower, cross_slope}}},
    };
}

/// Inverts every source term of a branch transform.
inline InvertedBranch invert(const TransformEquation& eq) {
    InvertedBranch out;
    out.reserve(eq.numerators.size());
    for (const auto& [src, num] : eq.numerators) out.emplace_back(src, inverse_laplace(RationalFunction(num, eq.denominator)));
    return out;
}

namespace detail {

/// Upper bound on sum |coeff * basis(x)| that does not cancel, used as the
/// scale for singularity tests.
inline double magnitude_at(const ClosedForm& g, double x) {
    double m = 0.0;
    for (const auto& t : g.terms()) {
        double env = 1.0;
        switch (t.kind) {
            case BasisKind::Exp: env = std::exp(t.k * x); break;
            case BasisKind::Cos:
            case BasisKind::Sin: env = 1.0; break;
            case BasisKind::Cosh:
            case BasisKind::Sinh: env = std::cosh(t.k * x); break;
        }
        m += std::abs(t.coeff) * env;
    }
    return m;
}

inline constexpr double kSingularity = 1e-12;

inline const ClosedForm& part(const InvertedBranch& branch, Source s) {
    static const ClosedForm zero;
    for (const auto& [src, g] : branch)
        if (src == s) return g;
    return zero;
}

inline RFun initial_value(const FuzzyBVP& p, Source s) {
    return s == Source::InitialLower ? p.bc0.lower() : p.bc0.upper();
}

/// Known part of a branch: sum over initial-value sources of bc0 value times basis.
inline RClosedForm known_part(const FuzzyBVP& p, const InvertedBranch& branch) {
    RClosedForm out;
    for (const auto& [src, g] : branch)
        if (src == Source::InitialLower || src == Source::InitialUpper) out = out + RClosedForm::scaled(initial_value(p, src), g);
    return out;
}

inline RFun known_at(const FuzzyBVP& p, const InvertedBranch& branch, double x) {
    RFun acc{};
    for (const auto& [src, g] : branch)
        if (src == Source::InitialLower || src == Source::InitialUpper) acc = acc + g(x) * initial_value(p, src);
    return acc;
}

inline void require_case(const FuzzyBVP& prob, bool coupled, std::string_view op) {
    if (is_coupled(prob.diff_case) != coupled) {
        throw CaseInapplicable(std::string(op) + " handles cases " + (coupled ? "12 and 21" : "11 and 22") +
                               ", got case " + std::string(to_string(prob.diff_case)));
    }
}

}  // namespace detail

/// Cases (1,1) and (2,2): each branch is an independent crisp problem whose
/// single unknown slope is fixed by the value at x = L.
///
/// Under (2,2) the two (ii) swaps cancel in y'', so the branch equations are
/// those of (1,1); only the labelling of the shooting constants differs.
inline FuzzySolution solve_uncoupled(const FuzzyBVP& prob) {
    detail::require_case(prob, false, "solve_uncoupled");
    const BranchTransforms tf = transform_bvp(prob);

    auto solve_branch = [&](const TransformEquation& eq, Source slope, RFun target) {
        const InvertedBranch inv = invert(eq);
        const ClosedForm& g_slope = detail::part(inv, slope);
        const double at_l = g_slope(prob.L);
        if (std::abs(at_l) <= detail::kSingularity * detail::magnitude_at(g_slope, prob.L)) {
            throw EigenvalueDegeneracy("boundary elimination is singular: the slope response vanishes at x = L "
                                       "(L is an eigenvalue spacing of the operator)");
        }
        const RFun f = (target - detail::known_at(prob, inv, prob.L)) / at_l;
        return std::pair{detail::known_part(prob, inv) + RClosedForm::scaled(f, g_slope), f};
    };

    auto [lower, f_lower] = solve_branch(tf.lower, Source::SlopeLower, prob.bcL.lower());
    auto [upper, f_upper] = solve_branch(tf.upper, Source::SlopeUpper, prob.bcL.upper());
    return {std::move(lower), std::move(upper), prob.diff_case, prob, f_lower, f_upper};
}

/// Cases (1,2) and (2,1): a lo'' = -(c + V) up and a up'' = -(c + V) lo. Both
/// slopes come from the 2x2 system imposed by the values at x = L.
inline FuzzySolution solve_coupled(const FuzzyBVP& prob) {
    detail::require_case(prob, true, "solve_coupled");
    const BranchTransforms tf = transform_bvp(prob);
    const InvertedBranch lo = invert(tf.lower);
    const InvertedBranch up = invert(tf.upper);
    const double L = prob.L;

    const ClosedForm& lo_sl = detail::part(lo, Source::SlopeLower);
    const ClosedForm& lo_su = detail::part(lo, Source::SlopeUpper);
    const ClosedForm& up_sl = detail::part(up, Source::SlopeLower);
    const ClosedForm& up_su = detail::part(up, Source::SlopeUpper);
    const double m11 = lo_sl(L), m12 = lo_su(L), m21 = up_sl(L), m22 = up_su(L);
    const double det = m11 * m22 - m12 * m21;
    const double det_scale = detail::magnitude_at(lo_sl, L) * detail::magnitude_at(up_su, L) +
                             detail::magnitude_at(lo_su, L) * detail::magnitude_at(up_sl, L);
    if (std::abs(det) <= detail::kSingularity * det_scale) {
        throw EigenvalueDegeneracy("coupled boundary system is singular at x = L (sin(mu L) sinh(mu L) = 0)");
    }

    const RFun rhs_lo = prob.bcL.lower() - detail::known_at(prob, lo, L);
    const RFun rhs_up = prob.bcL.upper() - detail::known_at(prob, up, L);
    const RFun h_lo = (m22 * rhs_lo - m12 * rhs_up) / det;
    const RFun h_up = (m11 * rhs_up - m21 * rhs_lo) / det;

    auto assemble = [&](const InvertedBranch& branch) {
        return detail::known_part(prob, branch) + RClosedForm::scaled(h_lo, detail::part(branch, Source::SlopeLower)) +
               RClosedForm::scaled(h_up, detail::part(branch, Source::SlopeUpper));
    };
    return {assemble(lo), assemble(up), prob.diff_case, prob, h_lo, h_up};
}

inline FuzzySolution solve(const FuzzyBVP& prob) {
    return is_coupled(prob.diff_case) ? solve_coupled(prob) : solve_uncoupled(prob);
}

}  // namespace fuzzylap
