#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzylap/errors.hpp"
#include "fuzzylap/solver.hpp"

namespace fuzzylap {

/// Slack for the grid monotonicity and ordering tests.
inline constexpr double kGridSlack = 1e-10;

struct ValidityReport {
    bool monotone_lower_in_r = true;
    bool monotone_upper_in_r = true;
    bool ordered = true;
    double max_ode_residual = 0.0;
    double max_boundary_residual = 0.0;
    double max_abs_solution = 0.0;
    std::optional<double> oracle_max_gap;
    std::size_t x_count = 0;
    std::size_t r_count = 0;

    bool valid_level_set() const noexcept { return monotone_lower_in_r && monotone_upper_in_r && ordered; }
};

/// Equispaced grid of n points on [lo, hi], endpoints exact.
inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    if (n > 0) g.back() = hi;
    return g;
}

/// Max over the grid of the ODE residual, using exact closed-form derivatives.
/// Uncoupled: |a y'' + b y' + c y| per branch. Coupled: |a lo'' + c' up| and
/// |a up'' + c' lo| with c' = c + potential_height.
inline double residual_ode(const FuzzySolution& sol, std::size_t x_count, std::size_t r_count) {
    const FuzzyBVP& p = sol.problem;
    const RClosedForm lo1 = sol.lower.derivative(), lo2 = lo1.derivative();
    const RClosedForm up1 = sol.upper.derivative(), up2 = up1.derivative();
    const double c = p.zero_order();
    const bool coupled = is_coupled(sol.diff_case);
    double worst = 0.0;
    for (double x : linspace(0.0, p.L, x_count)) {
        for (double r : linspace(0.0, 1.0, r_count)) {
            const double lo = sol.lower(x, r), up = sol.upper(x, r);
            double res_lo, res_up;
            if (coupled) {
                res_lo = p.a * lo2(x, r) + c * up;
                res_up = p.a * up2(x, r) + c * lo;
            } else {
                res_lo = p.a * lo2(x, r) + p.b * lo1(x, r) + c * lo;
                res_up = p.a * up2(x, r) + p.b * up1(x, r) + c * up;
            }
            worst = std::max({worst, std::abs(res_lo), std::abs(res_up)});
        }
    }
    return worst;
}

/// Max endpoint mismatch against bc0 at x = 0 and bcL at x = L over the r-grid.
inline double boundary_residual(const FuzzySolution& sol, std::size_t r_count) {
    const FuzzyBVP& p = sol.problem;
    double worst = 0.0;
    for (double r : linspace(0.0, 1.0, r_count)) {
        worst = std::max({worst, std::abs(sol.lower(0.0, r) - p.bc0.lower(r)), std::abs(sol.upper(0.0, r) - p.bc0.upper(r)),
                          std::abs(sol.lower(p.L, r) - p.bcL.lower(r)), std::abs(sol.upper(p.L, r) - p.bcL.upper(r))});
    }
    return worst;
}

/// Grid check of the level-set conditions at every sampled x: lower(x, .)
/// non-decreasing, upper(x, .) non-increasing, lower <= upper. Residual fields
/// are filled as well; the oracle gap is left empty (see attach_oracle).
inline ValidityReport check_level_set(const FuzzySolution& sol, std::size_t x_count, std::size_t r_count) {
    if (x_count < 2 || r_count < 2) throw InvalidInput("check_level_set needs at least 2 x samples and 2 r levels");
    ValidityReport rep;
    rep.x_count = x_count;
    rep.r_count = r_count;
    const auto rs = linspace(0.0, 1.0, r_count);
    for (double x : linspace(0.0, sol.problem.L, x_count)) {
        double prev_lo = 0.0, prev_up = 0.0;
        for (std::size_t j = 0; j < rs.size(); ++j) {
            const double lo = sol.lower(x, rs[j]), up = sol.upper(x, rs[j]);
            rep.max_abs_solution = std::max({rep.max_abs_solution, std::abs(lo), std::abs(up)});
            if (j > 0) {
                if (lo < prev_lo - kGridSlack) rep.monotone_lower_in_r = false;
                if (up > prev_up + kGridSlack) rep.monotone_upper_in_r = false;
            }
            if (lo > up + kGridSlack) rep.ordered = false;
            prev_lo = lo;
            prev_up = up;
        }
    }
    rep.max_ode_residual = residual_ode(sol, x_count, r_count);
    rep.max_boundary_residual = boundary_residual(sol, r_count);
    return rep;
}

struct SymbolicMonotonicity {
    bool lower_non_decreasing = true;
    bool upper_non_increasing = true;
};

/// Sign test on the r-slope of each branch at the sampled x. Exact for the
/// affine-in-r class; reports use the grid test.
inline SymbolicMonotonicity symbolic_monotonicity(const FuzzySolution& sol, std::size_t x_count) {
    SymbolicMonotonicity out;
    auto slope = [](const RClosedForm& g, double x) {
        double s = 0.0;
        for (const auto& t : g.terms()) s += t.coeff.c1 * basis_value(t.kind, t.k, x);
        return s;
    };
    for (double x : linspace(0.0, sol.problem.L, x_count)) {
        if (slope(sol.lower, x) < -kGridSlack) out.lower_non_decreasing = false;
        if (slope(sol.upper, x) > kGridSlack) out.upper_non_increasing = false;
    }
    return out;
}

struct FdSolution {
    std::vector<double> x;
    std::vector<double> y;
};

/// Second-order central differences for a y'' + b y' + c y = 0, y(0) = y0,
/// y(L) = yL on n intervals, solved by the Thomas algorithm. Accuracy O((L/n)^2).
inline FdSolution fd_oracle(double a, double b, double c, double L, double y0, double yL, std::size_t n) {
    if (n < 16) throw InvalidInput("fd_oracle needs n >= 16");
    if (a == 0.0) throw InvalidInput("fd_oracle needs a != 0");
    const double h = L / static_cast<double>(n);
    // rows scaled by h^2
    const double sub = a - 0.5 * b * h;
    const double diag = -2.0 * a + c * h * h;
    const double sup = a + 0.5 * b * h;
    const double scale = std::abs(sub) + std::abs(diag) + std::abs(sup);

    const std::size_t m = n - 1;
    std::vector<double> cp(m), dp(m);
    for (std::size_t i = 0; i < m; ++i) {
        double rhs = 0.0;
        if (i == 0) rhs -= sub * y0;
        if (i == m - 1) rhs -= sup * yL;
        const double piv = i == 0 ? diag : diag - sub * cp[i - 1];
        if (std::abs(piv) <= 1e-14 * scale) throw EigenvalueDegeneracy("finite-difference system is singular");
        cp[i] = sup / piv;
        dp[i] = (i == 0 ? rhs : rhs - sub * dp[i - 1]) / piv;
    }
    FdSolution out{linspace(0.0, L, n + 1), std::vector<double>(n + 1)};
    out.y[0] = y0;
    out.y[n] = yL;
    out.y[m] = dp[m - 1];
    for (std::size_t i = m - 1; i-- > 0;) out.y[i + 1] = dp[i] - cp[i] * out.y[i + 2];
    return out;
}

/// Richardson combination (4 y_{2n} - y_n) / 3 sampled on the n-interval grid.
inline FdSolution fd_oracle_richardson(double a, double b, double c, double L, double y0, double yL, std::size_t n) {
    FdSolution coarse = fd_oracle(a, b, c, L, y0, yL, n);
    const FdSolution fine = fd_oracle(a, b, c, L, y0, yL, 2 * n);
    for (std::size_t i = 0; i <= n; ++i) coarse.y[i] = (4.0 * fine.y[2 * i] - coarse.y[i]) / 3.0;
    return coarse;
}

struct FdCoupledSolution {
    std::vector<double> x;
    std::vector<double> lower;
    std::vector<double> upper;
};

/// Central differences for the stacked pair a lo'' + c up = 0, a up'' + c lo = 0,
/// solved as a block-tridiagonal system with 2x2 blocks.
inline FdCoupledSolution fd_oracle_coupled(double a, double c, double L, std::array<double, 2> at0, std::array<double, 2> atL,
                                           std::size_t n) {
    if (n < 16) throw InvalidInput("fd_oracle needs n >= 16");
    if (a == 0.0) throw InvalidInput("fd_oracle needs a != 0");
    using Mat = std::array<double, 4>;  // row-major 2x2
    using Vec = std::array<double, 2>;
    auto mul = [](const Mat& A, const Mat& B) {
        return Mat{A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3], A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3]};
    };
    auto mulv = [](const Mat& A, const Vec& v) { return Vec{A[0] * v[0] + A[1] * v[1], A[2] * v[0] + A[3] * v[1]}; };

    const double h = L / static_cast<double>(n);
    const double off = c * h * h;
    const Mat diag{-2.0 * a, off, off, -2.0 * a};
    // sub- and super-diagonal blocks are a * I
    const std::size_t m = n - 1;
    std::vector<Mat> cp(m);
    std::vector<Vec> dp(m);
    for (std::size_t i = 0; i < m; ++i) {
        Vec rhs{0.0, 0.0};
        if (i == 0) rhs = {-a * at0[0], -a * at0[1]};
        if (i == m - 1) rhs = {rhs[0] - a * atL[0], rhs[1] - a * atL[1]};
        Mat piv = diag;
        Vec r = rhs;
        if (i > 0) {
            for (int k = 0; k < 4; ++k) piv[k] -= a * cp[i - 1][k];
            r = {r[0] - a * dp[i - 1][0], r[1] - a * dp[i - 1][1]};
        }
        const double det = piv[0] * piv[3] - piv[1] * piv[2];
        const double scale = std::abs(piv[0] * piv[3]) + std::abs(piv[1] * piv[2]);
        if (std::abs(det) <= 1e-14 * scale) throw EigenvalueDegeneracy("coupled finite-difference system is singular");
        const Mat inv{piv[3] / det, -piv[1] / det, -piv[2] / det, piv[0] / det};
        cp[i] = mul(inv, Mat{a, 0.0, 0.0, a});
        dp[i] = mulv(inv, r);
    }
    FdCoupledSolution out{linspace(0.0, L, n + 1), std::vector<double>(n + 1), std::vector<double>(n + 1)};
    out.lower[0] = at0[0];
    out.upper[0] = at0[1];
    out.lower[n] = atL[0];
    out.upper[n] = atL[1];
    Vec next = dp[m - 1];
    out.lower[m] = next[0];
    out.upper[m] = next[1];
    for (std::size_t i = m - 1; i-- > 0;) {
        const Vec t = mulv(cp[i], next);
        next = {dp[i][0] - t[0], dp[i][1] - t[1]};
        out.lower[i + 1] = next[0];
        out.upper[i + 1] = next[1];
    }
    return out;
}

/// Max gap between the closed-form branches and an independent finite-difference
/// solve of the same crisp problems, over the r-grid.
inline double oracle_gap(const FuzzySolution& sol, std::size_t r_count, std::size_t n) {
    const FuzzyBVP& p = sol.problem;
    double worst = 0.0;
    for (double r : linspace(0.0, 1.0, r_count)) {
        if (is_coupled(sol.diff_case)) {
            const auto fd = fd_oracle_coupled(p.a, p.zero_order(), p.L, {p.bc0.lower(r), p.bc0.upper(r)},
                                              {p.bcL.lower(r), p.bcL.upper(r)}, n);
            for (std::size_t i = 0; i < fd.x.size(); ++i) {
                worst = std::max({worst, std::abs(fd.lower[i] - sol.lower(fd.x[i], r)),
                                  std::abs(fd.upper[i] - sol.upper(fd.x[i], r))});
            }
        } else {
            const auto lo = fd_oracle(p.a, p.b, p.c, p.L, p.bc0.lower(r), p.bcL.lower(r), n);
            const auto up = fd_oracle(p.a, p.b, p.c, p.L, p.bc0.upper(r), p.bcL.upper(r), n);
            for (std::size_t i = 0; i < lo.x.size(); ++i) {
                worst = std::max({worst, std::abs(lo.y[i] - sol.lower(lo.x[i], r)), std::abs(up.y[i] - sol.upper(up.x[i], r))});
            }
        }
    }
    return worst;
}

inline void attach_oracle(ValidityReport& rep, const FuzzySolution& sol, std::size_t n = 10000) {
    rep.oracle_max_gap = oracle_gap(sol, rep.r_count, n);
}

namespace detail {

inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

}  // namespace detail

/// Flat "key = value" block.
inline std::string to_key_values(const ValidityReport& rep) {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    std::string s;
    s += "monotone_lower_in_r = " + std::string(flag(rep.monotone_lower_in_r)) + "\n";
    s += "monotone_upper_in_r = " + std::string(flag(rep.monotone_upper_in_r)) + "\n";
    s += "ordered = " + std::string(flag(rep.ordered)) + "\n";
    s += "valid_level_set = " + std::string(flag(rep.valid_level_set())) + "\n";
    s += "max_ode_residual = " + detail::format_real(rep.max_ode_residual) + "\n";
    s += "max_boundary_residual = " + detail::format_real(rep.max_boundary_residual) + "\n";
    s += "max_abs_solution = " + detail::format_real(rep.max_abs_solution) + "\n";
    if (rep.oracle_max_gap) s += "oracle_max_gap = " + detail::format_real(*rep.oracle_max_gap) + "\n";
    s += "grid_x = " + std::to_string(rep.x_count) + "\n";
    s += "grid_r = " + std::to_string(rep.r_count) + "\n";
    return s;
}

}  // namespace fuzzylap
