#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string_view>
#include <tuple>
#include <vector>

#include "fuzzylap/fuzzy_number.hpp"

namespace fuzzylap {

enum class BasisKind { Exp, Cos, Sin, Cosh, Sinh };

constexpr std::string_view to_string(BasisKind kind) noexcept {
    switch (kind) {
        case BasisKind::Exp: return "exp";
        case BasisKind::Cos: return "cos";
        case BasisKind::Sin: return "sin";
        case BasisKind::Cosh: return "cosh";
        case BasisKind::Sinh: return "sinh";
    }
    return "?";
}

/// Value of the basis function kind(k x).
inline double basis_value(BasisKind kind, double k, double x) noexcept {
    switch (kind) {
        case BasisKind::Exp: return std::exp(k * x);
        case BasisKind::Cos: return std::cos(k * x);
        case BasisKind::Sin: return std::sin(k * x);
        case BasisKind::Cosh: return std::cosh(k * x);
        case BasisKind::Sinh: return std::sinh(k * x);
    }
    return 0.0;
}

template <typename Coeff>
struct BasicTerm {
    Coeff coeff{};
    BasisKind kind = BasisKind::Exp;
    double k = 0.0;

    friend bool operator==(const BasicTerm&, const BasicTerm&) = default;
};

/// Finite linear combination of exp, cos, sin, cosh and sinh terms.
///
/// Coeff is double for a plain function of x, or RFun when the coefficients
/// depend affinely on the membership level r. Terms are kept normalized: one
/// term per (kind, k), trigonometric and hyperbolic rates positive, zero
/// coefficients dropped, sorted by (kind, k).
template <typename Coeff>
class BasicClosedForm {
public:
    using Term = BasicTerm<Coeff>;

    BasicClosedForm() = default;
    explicit BasicClosedForm(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

    static BasicClosedForm term(Coeff coeff, BasisKind kind, double k) { return BasicClosedForm({Term{coeff, kind, k}}); }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    /// Coefficient of kind(k x), zero if absent.
    Coeff coefficient(BasisKind kind, double k) const {
        for (const Term& t : terms_)
            if (t.kind == kind && same_rate(t.k, k)) return t.coeff;
        return Coeff{};
    }

    BasicClosedForm derivative() const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const Term& t : terms_) {
            switch (t.kind) {
                case BasisKind::Exp: out.push_back({t.k * t.coeff, BasisKind::Exp, t.k}); break;
                case BasisKind::Cos: out.push_back({-t.k * t.coeff, BasisKind::Sin, t.k}); break;
                case BasisKind::Sin: out.push_back({t.k * t.coeff, BasisKind::Cos, t.k}); break;
                case BasisKind::Cosh: out.push_back({t.k * t.coeff, BasisKind::Sinh, t.k}); break;
                case BasisKind::Sinh: out.push_back({t.k * t.coeff, BasisKind::Cosh, t.k}); break;
            }
        }
        return BasicClosedForm(std::move(out));
    }

    friend BasicClosedForm operator+(const BasicClosedForm& a, const BasicClosedForm& b) {
        std::vector<Term> all(a.terms_);
        all.insert(all.end(), b.terms_.begin(), b.terms_.end());
        return BasicClosedForm(std::move(all));
    }
    friend BasicClosedForm operator*(double s, const BasicClosedForm& a) {
        std::vector<Term> out(a.terms_);
        for (Term& t : out) t.coeff = s * t.coeff;
        return BasicClosedForm(std::move(out));
    }
    friend BasicClosedForm operator-(const BasicClosedForm& a, const BasicClosedForm& b) { return a + (-1.0) * b; }

    friend bool operator==(const BasicClosedForm&, const BasicClosedForm&) = default;

    static bool same_rate(double k1, double k2) noexcept {
        return std::abs(k1 - k2) <= 1e-13 * std::max({1.0, std::abs(k1), std::abs(k2)});
    }

protected:
    std::vector<Term> terms_;

private:
    void normalize() {
        std::vector<Term> canon;
        canon.reserve(terms_.size());
        for (Term t : terms_) {
            if (t.kind != BasisKind::Exp) {
                if (t.k == 0.0) {
                    // cos(0)=cosh(0)=1, sin(0)=sinh(0)=0
                    if (t.kind == BasisKind::Cos || t.kind == BasisKind::Cosh) canon.push_back({t.coeff, BasisKind::Exp, 0.0});
                    continue;
                }
                if (t.k < 0.0) {
                    t.k = -t.k;
                    if (t.kind == BasisKind::Sin || t.kind == BasisKind::Sinh) t.coeff = -1.0 * t.coeff;
                }
            }
            canon.push_back(t);
        }
        std::stable_sort(canon.begin(), canon.end(), [](const Term& x, const Term& y) {
            return std::tie(x.kind, x.k) < std::tie(y.kind, y.k);
        });
        std::vector<Term> merged;
        for (const Term& t : canon) {
            if (!merged.empty() && merged.back().kind == t.kind && same_rate(merged.back().k, t.k)) {
                merged.back().coeff = merged.back().coeff + t.coeff;
            } else {
                merged.push_back(t);
            }
        }
        std::erase_if(merged, [](const Term& t) { return t.coeff == Coeff{}; });
        terms_ = std::move(merged);
    }
};

/// Real-valued closed form in x.
class ClosedForm : public BasicClosedForm<double> {
public:
    using BasicClosedForm<double>::BasicClosedForm;
    ClosedForm(BasicClosedForm<double> base) : BasicClosedForm<double>(std::move(base)) {}

    double operator()(double x) const noexcept {
        double s = 0.0;
        for (const Term& t : terms_) s += t.coeff * basis_value(t.kind, t.k, x);
        return s;
    }
    ClosedForm derivative() const { return BasicClosedForm<double>::derivative(); }
};

/// Closed form whose coefficients are affine in the membership level r.
class RClosedForm : public BasicClosedForm<RFun> {
public:
    using BasicClosedForm<RFun>::BasicClosedForm;
    RClosedForm(BasicClosedForm<RFun> base) : BasicClosedForm<RFun>(std::move(base)) {}

    /// r-coefficient times a plain closed form.
    static RClosedForm scaled(RFun coeff, const ClosedForm& g) {
        std::vector<Term> out;
        out.reserve(g.terms().size());
        for (const auto& t : g.terms()) out.push_back({t.coeff * coeff, t.kind, t.k});
        return RClosedForm(std::move(out));
    }

    ClosedForm at(double r) const {
        std::vector<ClosedForm::Term> out;
        out.reserve(terms_.size());
        for (const Term& t : terms_) out.push_back({t.coeff(r), t.kind, t.k});
        return ClosedForm(std::move(out));
    }

    double operator()(double x, double r) const noexcept {
        double s = 0.0;
        for (const Term& t : terms_) s += t.coeff(r) * basis_value(t.kind, t.k, x);
        return s;
    }
    RClosedForm derivative() const { return BasicClosedForm<RFun>::derivative(); }
};

inline double evaluate(const ClosedForm& g, double x) { return g(x); }
inline ClosedForm differentiate(const ClosedForm& g) { return g.derivative(); }

inline std::ostream& operator<<(std::ostream& os, const ClosedForm& g) {
    if (g.empty()) return os << "0";
    bool first = true;
    for (const auto& t : g.terms()) {
        if (!first) os << (t.coeff < 0 ? " - " : " + ");
        else if (t.coeff < 0) os << "-";
        first = false;
        os << std::abs(t.coeff) << "*" << to_string(t.kind) << "(" << t.k << "x)";
    }
    return os;
}

}  // namespace fuzzylap
