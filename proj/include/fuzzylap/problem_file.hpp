#pragma once

// Plain-text problem description:
//
//   # comment
//   [ode]        a = 1      b = 0      c = -1
//   [domain]     L = 1
//   [bc0]        triangular = 1 2 3            (or lower = c0 c1 / upper = c0 c1)
//   [bcL]        lower = 4 1   upper = 6 -1
//   [solve]      case = 11 | 22 | 12 | 21 | all    (default all)
//   [potential]  height = 0                       (optional)
//   [output]     r_levels = 11   x_samples = 101  (optional)
//
// One "key = value" per line; '#' and ';' start comments.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzylap/errors.hpp"
#include "fuzzylap/problem.hpp"

namespace fuzzylap {

struct ProblemSpec {
    FuzzyBVP problem;
    /// nullopt runs every case. problem.diff_case mirrors it (Case11 for all).
    std::optional<DiffCase> requested;
    std::size_t r_levels = 11;
    std::size_t x_samples = 101;

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Parse failure with the offending line (0 when the problem is a missing item).
class ProblemFileError : public InvalidInput {
public:
    ProblemFileError(int line, std::string key, const std::string& message)
        : InvalidInput(message), line_(line), key_(std::move(key)) {}

    int line() const noexcept { return line_; }
    const std::string& key() const noexcept { return key_; }

private:
    int line_;
    std::string key_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Entry {
    std::string value;
    int line = 0;
};

using Section = std::map<std::string, Entry>;

inline std::vector<double> parse_reals(const Entry& e, const std::string& key, std::size_t count) {
    std::vector<double> out;
    std::istringstream in(e.value);
    std::string tok;
    while (in >> tok) {
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size()) throw ProblemFileError(e.line, key, "'" + key + "': not a number: " + tok);
        out.push_back(v);
    }
    if (out.size() != count) {
        throw ProblemFileError(e.line, key, "'" + key + "' expects " + std::to_string(count) + " number(s), got " +
                                                std::to_string(out.size()));
    }
    return out;
}

inline std::size_t parse_count(const Entry& e, const std::string& key) {
    const double v = parse_reals(e, key, 1)[0];
    if (!(v >= 2.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
        throw ProblemFileError(e.line, key, "'" + key + "' must be an integer >= 2");
    }
    return static_cast<std::size_t>(v);
}

}  // namespace detail

inline ProblemSpec parse_problem(std::string_view text) {
    using detail::Entry;
    using detail::Section;
    static const std::map<std::string, std::set<std::string>> known{
        {"ode", {"a", "b", "c"}},
        {"domain", {"L"}},
        {"bc0", {"triangular", "lower", "upper"}},
        {"bcL", {"triangular", "lower", "upper"}},
        {"solve", {"case"}},
        {"potential", {"height"}},
        {"output", {"r_levels", "x_samples"}},
    };

    std::map<std::string, Section> sections;
    std::map<std::string, int> section_line;
    std::string current;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = raw.find_first_of("#;"); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string_view line = detail::trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ProblemFileError(line_no, "", "malformed section header");
            current = std::string(detail::trim(line.substr(1, line.size() - 2)));
            if (!known.contains(current)) throw ProblemFileError(line_no, current, "unknown section [" + current + "]");
            if (section_line.contains(current)) throw ProblemFileError(line_no, current, "duplicate section [" + current + "]");
            section_line[current] = line_no;
            sections[current];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ProblemFileError(line_no, "", "expected 'key = value'");
        const std::string key(detail::trim(line.substr(0, eq)));
        const std::string value(detail::trim(line.substr(eq + 1)));
        if (current.empty()) throw ProblemFileError(line_no, key, "key '" + key + "' outside of any section");
        if (!known.at(current).contains(key))
            throw ProblemFileError(line_no, key, "unknown key '" + key + "' in section [" + current + "]");
        if (sections[current].contains(key))
            throw ProblemFileError(line_no, key, "duplicate key '" + key + "' in section [" + current + "]");
        sections[current][key] = Entry{value, line_no};
    }

    auto require_section = [&](const std::string& name) -> const Section& {
        auto it = sections.find(name);
        if (it == sections.end()) throw ProblemFileError(0, name, "missing section [" + name + "]");
        return it->second;
    };
    auto require_key = [&](const std::string& sec, const std::string& key) -> const Entry& {
        const Section& s = require_section(sec);
        auto it = s.find(key);
        if (it == s.end())
            throw ProblemFileError(section_line[sec], key, "missing key '" + key + "' in section [" + sec + "]");
        return it->second;
    };

    ProblemSpec spec;
    FuzzyBVP& p = spec.problem;
    require_section("ode");
    p.a = detail::parse_reals(require_key("ode", "a"), "a", 1)[0];
    p.b = detail::parse_reals(require_key("ode", "b"), "b", 1)[0];
    p.c = detail::parse_reals(require_key("ode", "c"), "c", 1)[0];
    if (p.a == 0.0) throw ProblemFileError(require_key("ode", "a").line, "a", "'a' (coefficient of y'') must be nonzero");
    const Entry& len = require_key("domain", "L");
    p.L = detail::parse_reals(len, "L", 1)[0];
    if (!(p.L > 0.0)) throw ProblemFileError(len.line, "L", "'L' must be positive");

    auto fuzzy = [&](const std::string& sec) {
        const Section& s = require_section(sec);
        const bool tri = s.contains("triangular");
        const bool aff = s.contains("lower") || s.contains("upper");
        if (tri && aff)
            throw ProblemFileError(s.at("triangular").line, "triangular",
                                   "section [" + sec + "] mixes 'triangular' with 'lower'/'upper'");
        if (!tri && !aff) throw ProblemFileError(section_line[sec], sec, "section [" + sec + "] needs 'triangular' or 'lower'/'upper'");
        try {
            if (tri) {
                const auto v = detail::parse_reals(s.at("triangular"), "triangular", 3);
                return triangular(v[0], v[1], v[2]);
            }
            const auto lo = detail::parse_reals(require_key(sec, "lower"), "lower", 2);
            const auto up = detail::parse_reals(require_key(sec, "upper"), "upper", 2);
            return FuzzyNumber(RFun{lo[0], lo[1]}, RFun{up[0], up[1]});
        } catch (const ProblemFileError&) {
            throw;
        } catch (const InvalidInput& e) {
            const std::string key = tri ? "triangular" : "lower";
            throw ProblemFileError(s.at(key).line, key, "section [" + sec + "]: " + e.what());
        }
    };
    p.bc0 = fuzzy("bc0");
    p.bcL = fuzzy("bcL");

    if (auto it = sections.find("potential"); it != sections.end() && it->second.contains("height")) {
        p.potential_height = detail::parse_reals(it->second.at("height"), "height", 1)[0];
    }
    if (auto it = sections.find("solve"); it != sections.end() && it->second.contains("case")) {
        const Entry& e = it->second.at("case");
        if (e.value != "all") {
            spec.requested = parse_case(e.value);
            if (!spec.requested) throw ProblemFileError(e.line, "case", "'case' must be one of 11, 22, 12, 21, all");
        }
    }
    p.diff_case = spec.requested.value_or(DiffCase::Case11);
    if (auto it = sections.find("output"); it != sections.end()) {
        if (it->second.contains("r_levels")) spec.r_levels = detail::parse_count(it->second.at("r_levels"), "r_levels");
        if (it->second.contains("x_samples")) spec.x_samples = detail::parse_count(it->second.at("x_samples"), "x_samples");
    }
    return spec;
}

/// Serializes a spec so that parse_problem(write_problem(s)) == s.
inline std::string write_problem(const ProblemSpec& spec) {
    auto num = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    const FuzzyBVP& p = spec.problem;
    std::string s;
    s += "[ode]\na = " + num(p.a) + "\nb = " + num(p.b) + "\nc = " + num(p.c) + "\n\n";
    s += "[domain]\nL = " + num(p.L) + "\n\n";
    for (const auto& [name, fn] : {std::pair{"bc0", p.bc0}, std::pair{"bcL", p.bcL}}) {
        s += std::string("[") + name + "]\n";
        s += "lower = " + num(fn.lower().c0) + " " + num(fn.lower().c1) + "\n";
        s += "upper = " + num(fn.upper().c0) + " " + num(fn.upper().c1) + "\n\n";
    }
    s += "[potential]\nheight = " + num(p.potential_height) + "\n\n";
    s += "[solve]\ncase = " + (spec.requested ? std::string(to_string(*spec.requested)) : std::string("all")) + "\n\n";
    s += "[output]\nr_levels = " + std::to_string(spec.r_levels) + "\nx_samples = " + std::to_string(spec.x_samples) + "\n";
    return s;
}

}  // namespace fuzzylap
