#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzylap/enumerate.hpp"
#include "fuzzylap/problem_file.hpp"
#include "fuzzylap/solver.hpp"
#include "fuzzylap/validate.hpp"

namespace fuzzylap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAllFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunOptions {
    std::string problem_path;
    /// "11", "22", "12", "21" or "all"; overrides [solve] case.
    std::optional<std::string> case_override;
    std::optional<std::size_t> r_levels;
    std::optional<std::size_t> x_samples;
    bool oracle = false;
    std::size_t oracle_intervals = 10000;
    std::string out_dir = ".";
};

inline constexpr double kReportLevels[] = {0.0, 0.5, 1.0};

inline std::string format_real(double v) { return detail::format_real(v); }

inline std::string level_label(double r) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%g", r);
    return buf;
}

/// x, r, lower, upper over the configured grids; x outer, r inner.
inline std::string solution_csv(const FuzzySolution& sol, std::size_t x_samples, std::size_t r_levels) {
    std::string s = "x,r,lower,upper\n";
    const auto rs = linspace(0.0, 1.0, r_levels);
    for (double x : linspace(0.0, sol.problem.L, x_samples)) {
        for (double r : rs) {
            s += format_real(x) + "," + format_real(r) + "," + format_real(sol.lower(x, r)) + "," +
                 format_real(sol.upper(x, r)) + "\n";
        }
    }
    return s;
}

/// Report block for one case: shooting constants at r = 0, 0.5, 1 followed by
/// the validity report, or the failure reason.
inline std::string report_block(const CaseOutcome& oc) {
    std::string s = "case = " + std::string(to_string(oc.diff_case)) + "\n";
    if (!oc.ok()) {
        s += "status = error\n";
        s += "error_kind = " + oc.error_kind + "\n";
        s += "error_message = " + oc.error_message + "\n";
        return s;
    }
    s += "status = ok\n";
    const bool coupled = is_coupled(oc.diff_case);
    s += std::string("method = ") + (coupled ? "coupled" : "uncoupled") + "\n";
    const ShootingConstants k = oc.solution->shooting_constants();
    const std::string n1 = coupled ? "H1" : "F1", n2 = coupled ? "H2" : "F2";
    for (double r : kReportLevels) s += n1 + "_r" + level_label(r) + " = " + format_real(k.first(r)) + "\n";
    for (double r : kReportLevels) s += n2 + "_r" + level_label(r) + " = " + format_real(k.second(r)) + "\n";
    s += to_key_values(*oc.report);
    return s;
}

/// Human-readable term tables per branch with coefficients at r = 0, 0.5, 1.
inline std::string solution_summary(const CaseOutcome& oc) {
    std::ostringstream os;
    os << "== case (" << to_string(oc.diff_case) << ") ==\n";
    if (!oc.ok()) {
        os << "failed: " << oc.error_kind << ": " << oc.error_message << "\n";
        return os.str();
    }
    const FuzzySolution& sol = *oc.solution;
    auto table = [&](const char* name, const RClosedForm& g) {
        os << name << "(x, r) = sum coeff(r) * basis(k x)\n";
        char line[160];
        std::snprintf(line, sizeof line, "  %-5s %24s %24s %24s %24s\n", "basis", "k", "coeff(r=0)", "coeff(r=0.5)",
                      "coeff(r=1)");
        os << line;
        for (const auto& t : g.terms()) {
            std::snprintf(line, sizeof line, "  %-5s %24.16e %24.16e %24.16e %24.16e\n", std::string(to_string(t.kind)).c_str(),
                          t.k, t.coeff(0.0), t.coeff(0.5), t.coeff(1.0));
            os << line;
        }
    };
    table("lower", sol.lower);
    table("upper", sol.upper);
    return os.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

/// Solves the problem file, writes summary.txt, report.txt and one
/// solution_<case>.csv per solved case into out_dir. Returns 0 if at least one
/// requested case was solved, 1 if all failed, 2 on input errors.
inline int run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
    ProblemSpec spec;
    try {
        spec = parse_problem(read_file(opts.problem_path));
    } catch (const ProblemFileError& e) {
        err << opts.problem_path << ":" << e.line() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<DiffCase> cases;
    std::optional<DiffCase> requested = spec.requested;
    if (opts.case_override) {
        if (*opts.case_override == "all") {
            requested.reset();
        } else if (auto dc = parse_case(*opts.case_override)) {
            requested = dc;
        } else {
            err << "--case must be one of 11, 22, 12, 21, all\n";
            return kExitUsage;
        }
    }
    if (requested) cases.push_back(*requested);
    else cases.assign(kAllCases.begin(), kAllCases.end());

    EnumerateOptions eo;
    eo.r_count = opts.r_levels.value_or(spec.r_levels);
    eo.x_count = opts.x_samples.value_or(spec.x_samples);
    if (eo.r_count < 2 || eo.x_count < 2) {
        err << "--r-levels and --x-samples must be >= 2\n";
        return kExitUsage;
    }
    eo.oracle_intervals = opts.oracle ? opts.oracle_intervals : 0;

    std::vector<CaseOutcome> outcomes;
    for (DiffCase dc : cases) outcomes.push_back(solve_case(spec.problem, dc, eo));

    std::string summary, report;
    for (const CaseOutcome& oc : outcomes) {
        summary += solution_summary(oc) + "\n";
        if (!report.empty()) report += "\n";
        report += report_block(oc);
    }

    try {
        const std::filesystem::path dir(opts.out_dir);
        std::filesystem::create_directories(dir);
        write_file(dir / "summary.txt", summary);
        write_file(dir / "report.txt", report);
        for (const CaseOutcome& oc : outcomes) {
            if (oc.ok()) {
                write_file(dir / ("solution_" + std::string(to_string(oc.diff_case)) + ".csv"),
                           solution_csv(*oc.solution, eo.x_count, eo.r_count));
            }
        }
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    out << summary << report;
    bool any = false;
    for (const CaseOutcome& oc : outcomes) {
        if (oc.ok()) any = true;
        else err << "case " << to_string(oc.diff_case) << ": " << oc.error_kind << ": " << oc.error_message << "\n";
    }
    return any ? kExitOk : kExitAllFailed;
}

}  // namespace fuzzylap::cli
