#include <gtest/gtest.h>

#include <cmath>
#include <utility>

#include "fuzzylap/solver.hpp"
#include "fuzzylap/validate.hpp"
#include "generators.hpp"

namespace fuzzylap {
namespace {

FuzzyBVP cosh_problem() {
    FuzzyBVP p;
    p.a = 1.0;
    p.c = -1.0;
    p.L = 1.0;
    p.bc0 = FuzzyNumber{{1, 1}, {3, -1}};
    p.bcL = FuzzyNumber{{4, 1}, {6, -1}};
    return p;
}

// y'' = y, y(0) = y0, y(1) = y1
double cosh_exact(double y0, double y1, double x) {
    return y0 * std::cosh(x) + (y1 - y0 * std::cosh(1.0)) / std::sinh(1.0) * std::sinh(x);
}

TEST(Linspace, EndpointsAndCount) {
    const auto g = linspace(0.0, 2.0, 5);
    ASSERT_EQ(g.size(), 5u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 2.0);
    EXPECT_DOUBLE_EQ(g[1], 0.5);
}

TEST(CheckLevelSet, ValidSolutionPasses) {
    const FuzzySolution sol = solve(cosh_problem());
    const ValidityReport rep = check_level_set(sol, 101, 11);
    EXPECT_TRUE(rep.valid_level_set());
    EXPECT_LE(rep.max_boundary_residual, 1e-12);
    EXPECT_LE(rep.max_ode_residual, 1e-12);
    EXPECT_EQ(rep.x_count, 101u);
    EXPECT_EQ(rep.r_count, 11u);
    EXPECT_FALSE(rep.oracle_max_gap.has_value());
}

TEST(CheckLevelSet, SwappedEnvelopesAreFlagged) {
    FuzzySolution sol = solve(cosh_problem());
    std::swap(sol.lower, sol.upper);
    const ValidityReport rep = check_level_set(sol, 101, 11);
    EXPECT_FALSE(rep.ordered);
    EXPECT_FALSE(rep.monotone_lower_in_r);
    EXPECT_FALSE(rep.monotone_upper_in_r);
    EXPECT_FALSE(rep.valid_level_set());
}

TEST(CheckLevelSet, CrispControlPasses) {
    FuzzyBVP p = cosh_problem();
    p.bc0 = FuzzyNumber::crisp(1.0);
    p.bcL = FuzzyNumber::crisp(2.0);
    const ValidityReport rep = check_level_set(solve(p), 51, 6);
    EXPECT_TRUE(rep.valid_level_set());
}

TEST(CheckLevelSet, RejectsDegenerateGrids) {
    const FuzzySolution sol = solve(cosh_problem());
    EXPECT_THROW(check_level_set(sol, 1, 11), InvalidInput);
    EXPECT_THROW(check_level_set(sol, 11, 1), InvalidInput);
}

TEST(ResidualOde, DetectsWrongCoefficient) {
    FuzzySolution sol = solve(cosh_problem());
    sol.problem.c += 0.1;  // solution no longer solves the stated equation
    EXPECT_GT(residual_ode(sol, 101, 11), 1e-3);
}

TEST(BoundaryResidual, DetectsWrongData) {
    FuzzySolution sol = solve(cosh_problem());
    sol.problem.bcL = FuzzyNumber{{3.5, 1}, {6, -1}};
    EXPECT_NEAR(boundary_residual(sol, 11), 0.5, 1e-12);
}

TEST(FdOracle, ZeroData) {
    const auto fd = fd_oracle(1.0, 0.3, -2.0, 1.0, 0.0, 0.0, 64);
    for (double y : fd.y) EXPECT_EQ(y, 0.0);
}

TEST(FdOracle, CoshSolution) {
    const auto fd = fd_oracle(1.0, 0.0, -1.0, 1.0, 1.0, 2.0, 10000);
    double gap = 0.0;
    for (std::size_t i = 0; i < fd.x.size(); ++i) gap = std::max(gap, std::abs(fd.y[i] - cosh_exact(1, 2, fd.x[i])));
    EXPECT_LE(gap, 1e-7);
}

TEST(FdOracle, HomogeneousExampleAtLowestLevel) {
    // x'' - 3x' + 2x = 0, x(0) = -0.5, x(1) = -1
    const auto fd = fd_oracle(1.0, -3.0, 2.0, 1.0, -0.5, -1.0, 10000);
    const double e = std::exp(1.0);
    const double B = (-1.0 + 0.5 * e) / (e * e - e), A = -0.5 - B;
    for (std::size_t i = 0; i < fd.x.size(); i += 100) {
        EXPECT_NEAR(fd.y[i], A * std::exp(fd.x[i]) + B * std::exp(2 * fd.x[i]), 1e-7);
    }
}

TEST(FdOracle, SecondOrderConvergence) {
    auto err = [](std::size_t n) {
        const auto fd = fd_oracle(1.0, 0.0, -1.0, 1.0, 1.0, 2.0, n);
        double e = 0.0;
        for (std::size_t i = 0; i < fd.x.size(); ++i) e = std::max(e, std::abs(fd.y[i] - cosh_exact(1, 2, fd.x[i])));
        return e;
    };
    double prev = err(64);
    for (std::size_t n = 128; n <= 4096; n *= 2) {
        const double cur = err(n);
        const double ratio = prev / cur;
        EXPECT_GE(ratio, 3.6) << "n = " << n;
        EXPECT_LE(ratio, 4.4) << "n = " << n;
        prev = cur;
    }
}

TEST(FdOracle, RichardsonIsMoreAccurate) {
    const auto plain = fd_oracle(1.0, 0.5, -1.0, 1.0, 1.0, 2.0, 200);
    const auto rich = fd_oracle_richardson(1.0, 0.5, -1.0, 1.0, 1.0, 2.0, 200);
    FuzzyBVP p;
    p.a = 1.0;
    p.b = 0.5;
    p.c = -1.0;
    p.bc0 = FuzzyNumber::crisp(1.0);
    p.bcL = FuzzyNumber::crisp(2.0);
    const FuzzySolution sol = solve(p);
    double e_plain = 0.0, e_rich = 0.0;
    for (std::size_t i = 0; i < plain.x.size(); ++i) {
        e_plain = std::max(e_plain, std::abs(plain.y[i] - sol.lower(plain.x[i], 0.0)));
        e_rich = std::max(e_rich, std::abs(rich.y[i] - sol.lower(rich.x[i], 0.0)));
    }
    EXPECT_LT(e_rich, e_plain / 100);
}

TEST(FdOracle, Errors) {
    EXPECT_THROW(fd_oracle(1.0, 0.0, -1.0, 1.0, 0.0, 0.0, 8), InvalidInput);
    EXPECT_THROW(fd_oracle(0.0, 0.0, -1.0, 1.0, 0.0, 0.0, 64), InvalidInput);
}

TEST(FdOracleCoupled, AgreesWithClosedForm) {
    FuzzyBVP p = cosh_problem();
    p.diff_case = DiffCase::Case12;
    const FuzzySolution sol = solve(p);
    const auto fd = fd_oracle_coupled(1.0, -1.0, 1.0, {1.0, 3.0}, {4.0, 6.0}, 10000);
    double gap = 0.0;
    for (std::size_t i = 0; i < fd.x.size(); ++i) {
        gap = std::max({gap, std::abs(fd.lower[i] - sol.lower(fd.x[i], 0.0)), std::abs(fd.upper[i] - sol.upper(fd.x[i], 0.0))});
    }
    EXPECT_LE(gap, 1e-5);
}

TEST(OracleGap, AttachesToReport) {
    const FuzzySolution sol = solve(cosh_problem());
    ValidityReport rep = check_level_set(sol, 101, 11);
    attach_oracle(rep, sol);
    ASSERT_TRUE(rep.oracle_max_gap.has_value());
    EXPECT_LE(*rep.oracle_max_gap, 1e-5);
    EXPECT_NE(to_key_values(rep).find("oracle_max_gap = "), std::string::npos);
}

TEST(KeyValues, FixedKeyOrder) {
    const ValidityReport rep = check_level_set(solve(cosh_problem()), 11, 3);
    const std::string s = to_key_values(rep);
    const char* keys[] = {"monotone_lower_in_r", "monotone_upper_in_r", "ordered", "valid_level_set",
                          "max_ode_residual", "max_boundary_residual", "max_abs_solution", "grid_x", "grid_r"};
    std::size_t pos = 0;
    for (const char* k : keys) {
        const std::size_t at = s.find(std::string(k) + " = ", pos);
        ASSERT_NE(at, std::string::npos) << k;
        pos = at;
    }
    EXPECT_EQ(s.find("oracle_max_gap"), std::string::npos);
}

TEST(ValidateProperties, SymbolicAgreesWithGrid) {
    testing::Gen g(31);
    int non_monotone_seen = 0;
    for (int i = 0; i < 300; ++i) {
        FuzzyBVP p;
        p.a = g.uniform(0.5, 2.0);
        p.L = g.uniform(0.5, 1.5);
        const double k = g.uniform(0.3, 3.0);
        if (g.pick(2)) {
            if (std::abs(std::sin(k * p.L)) < 0.2) continue;
            p.c = p.a * k * k;
        } else {
            p.c = -p.a * k * k;
            p.diff_case = g.pick(2) ? DiffCase::Case11 : DiffCase::Case12;
        }
        p.bc0 = g.fuzzy();
        p.bcL = g.fuzzy();
        const FuzzySolution sol = solve(p);
        const auto sym = symbolic_monotonicity(sol, 101);
        const ValidityReport rep = check_level_set(sol, 101, 11);
        EXPECT_EQ(sym.lower_non_decreasing, rep.monotone_lower_in_r);
        EXPECT_EQ(sym.upper_non_increasing, rep.monotone_upper_in_r);
        if (!rep.monotone_lower_in_r || !rep.monotone_upper_in_r) ++non_monotone_seen;
    }
    EXPECT_GT(non_monotone_seen, 0);
}

TEST(ValidateProperties, RefiningGridNeverRestoresValidity) {
    testing::Gen g(57);
    int invalid_seen = 0;
    for (int i = 0; i < 200; ++i) {
        // oscillatory kernels change sign, so monotone data need not give a level set
        FuzzyBVP p;
        p.a = 1.0;
        p.L = g.uniform(0.5, 2.0);
        const double k = g.uniform(0.5, 3.0);
        if (std::abs(std::sin(k * p.L)) < 0.2) continue;
        p.c = k * k;
        p.bc0 = g.fuzzy();
        p.bcL = g.fuzzy();
        const FuzzySolution sol = solve(p);
        // the 2n-1 grid contains the n grid, so a violation can only persist
        const ValidityReport coarse = check_level_set(sol, 21, 6);
        const ValidityReport fine = check_level_set(sol, 41, 11);
        if (!coarse.valid_level_set()) {
            ++invalid_seen;
            EXPECT_FALSE(fine.valid_level_set());
        }
    }
    EXPECT_GT(invalid_seen, 0);
}

}  // namespace
}  // namespace fuzzylap
