#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "fuzzylap/closed_form.hpp"
#include "fuzzylap/errors.hpp"
#include "fuzzylap/polynomial.hpp"

namespace fuzzylap {

/// numerator(p) / denominator(p) with real coefficients.
class RationalFunction {
public:
    RationalFunction() : den_{1.0} {}
    RationalFunction(Polynomial numerator, Polynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw InvalidInput("rational function with zero denominator");
    }

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    bool strictly_proper() const noexcept { return num_.degree() < den_.degree(); }

    /// Same function with a monic denominator.
    RationalFunction normalized() const {
        const double lead = den_.leading();
        return {(1.0 / lead) * num_, (1.0 / lead) * den_};
    }

    template <typename T>
    T operator()(T p) const {
        return num_(p) / den_(p);
    }

    friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
        return {f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_};
    }
    friend RationalFunction operator*(double s, const RationalFunction& f) { return {s * f.num_, f.den_}; }

private:
    Polynomial num_;
    Polynomial den_;
};

/// Largest coefficient gap between the monic normalizations of f and g, each
/// coefficient difference scaled by max(1, |coefficient|).
inline double coefficient_gap(const RationalFunction& f, const RationalFunction& g) {
    const RationalFunction a = f.normalized(), b = g.normalized();
    auto gap = [](const Polynomial& x, const Polynomial& y) {
        const std::size_t n = std::max(x.coefficients().size(), y.coefficients().size());
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double scale = std::max({1.0, std::abs(x[i]), std::abs(y[i])});
            m = std::max(m, std::abs(x[i] - y[i]) / scale);
        }
        return m;
    };
    return std::max(gap(a.numerator(), b.numerator()), gap(a.denominator(), b.denominator()));
}

struct PartialFraction {
    Complex residue;
    Complex root;
};

/// f = sum residue_i / (p - root_i) for strictly proper f with distinct roots.
inline std::vector<PartialFraction> partial_fractions(const RationalFunction& f) {
    if (!f.strictly_proper()) throw InvalidInput("partial fractions require a strictly proper rational function");
    const Polynomial dprime = f.denominator().derivative();
    std::vector<PartialFraction> out;
    for (const Root& r : roots(f.denominator())) {
        // simple pole: residue = N(z) / D'(z)
        out.push_back({f.numerator()(r.value) / dprime(r.value), r.value});
    }
    return out;
}

/// Recombines a partial-fraction expansion over prod (p - root_i).
inline RationalFunction recombine(const std::vector<PartialFraction>& terms) {
    std::vector<Complex> all_roots;
    for (const auto& t : terms) all_roots.push_back(t.root);
    std::vector<Complex> num(std::max<std::size_t>(terms.size(), 1), Complex(0.0));
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::vector<Complex> others;
        for (std::size_t j = 0; j < terms.size(); ++j)
            if (j != i) others.push_back(terms[j].root);
        const auto prod = expand_roots(others);
        for (std::size_t k = 0; k < prod.size(); ++k) num[k] += terms[i].residue * prod[k];
    }
    const auto den = expand_roots(all_roots);
    std::vector<double> n_re, d_re;
    for (const Complex& c : num) n_re.push_back(c.real());
    for (const Complex& c : den) d_re.push_back(c.real());
    return {Polynomial(std::move(n_re)), Polynomial(std::move(d_re))};
}

namespace detail {

// Coefficients smaller than this fraction of the largest one are rounding residue
// of conjugate recombination and are dropped.
inline constexpr double kCoefficientSnap = 1e-14;

}  // namespace detail

/// Inverse transform of a strictly proper rational function with distinct roots.
///
/// Real root a gives exp(a x); a real pair +-k gives cosh/sinh(k x); a
/// pure-imaginary pair +-ik gives cos/sin(k x). Complex roots with a nonzero
/// real part fall outside the basis and throw UnsupportedProblem.
inline ClosedForm inverse_laplace(const RationalFunction& f) {
    const auto pf = partial_fractions(f);
    double scale = 0.0;
    for (const auto& t : pf) scale = std::max(scale, std::abs(t.root));
    const double tol = 1e-12 * std::max(1.0, scale);

    std::vector<ClosedForm::Term> terms;
    std::vector<bool> used(pf.size(), false);
    for (std::size_t i = 0; i < pf.size(); ++i) {
        if (used[i]) continue;
        const Complex z = pf[i].root;
        const Complex rho = pf[i].residue;
        if (z.imag() == 0.0) {
            // look for the mirrored real root -z
            std::size_t mirror = pf.size();
            if (z.real() != 0.0) {
                for (std::size_t j = i + 1; j < pf.size(); ++j) {
                    if (!used[j] && pf[j].root.imag() == 0.0 && std::abs(pf[j].root.real() + z.real()) <= tol) {
                        mirror = j;
                        break;
                    }
                }
            }
            if (mirror == pf.size()) {
                terms.push_back({rho.real(), BasisKind::Exp, z.real()});
            } else {
                used[mirror] = true;
                // rho_+ e^{kx} + rho_- e^{-kx} = (rho_+ + rho_-) cosh + (rho_+ - rho_-) sinh
                const bool positive = z.real() > 0.0;
                const double k = std::abs(z.real());
                const double rp = positive ? rho.real() : pf[mirror].residue.real();
                const double rm = positive ? pf[mirror].residue.real() : rho.real();
                terms.push_back({rp + rm, BasisKind::Cosh, k});
                terms.push_back({rp - rm, BasisKind::Sinh, k});
            }
        } else if (z.real() == 0.0) {
            std::size_t mirror = pf.size();
            for (std::size_t j = i + 1; j < pf.size(); ++j) {
                if (!used[j] && pf[j].root.real() == 0.0 && std::abs(pf[j].root.imag() + z.imag()) <= tol) {
                    mirror = j;
                    break;
                }
            }
            if (mirror == pf.size()) throw InvalidInput("imaginary root without its conjugate");
            used[mirror] = true;
            // rho e^{ikx} + conj(rho) e^{-ikx} = 2 Re(rho) cos(kx) - 2 Im(rho) sin(kx), taking Im(z) > 0
            const Complex up = z.imag() > 0.0 ? rho : pf[mirror].residue;
            const double k = std::abs(z.imag());
            terms.push_back({2.0 * up.real(), BasisKind::Cos, k});
            terms.push_back({-2.0 * up.imag(), BasisKind::Sin, k});
        } else {
            throw UnsupportedProblem("complex root with nonzero real part (damped oscillation) is outside the closed-form basis");
        }
        used[i] = true;
    }

    double cmax = 0.0;
    for (const auto& t : terms) cmax = std::max(cmax, std::abs(t.coeff));
    for (auto& t : terms)
        if (std::abs(t.coeff) <= detail::kCoefficientSnap * cmax) t.coeff = 0.0;
    return ClosedForm(std::move(terms));
}

/// Laplace table entry for a single term.
inline RationalFunction table_transform(const ClosedForm::Term& t) {
    const double c = t.coeff, k = t.k;
    switch (t.kind) {
        case BasisKind::Exp: return {Polynomial{c}, Polynomial{-k, 1.0}};
        case BasisKind::Cos: return {Polynomial{0.0, c}, Polynomial{k * k, 0.0, 1.0}};
        case BasisKind::Sin: return {Polynomial{c * k}, Polynomial{k * k, 0.0, 1.0}};
        case BasisKind::Cosh: return {Polynomial{0.0, c}, Polynomial{-k * k, 0.0, 1.0}};
        case BasisKind::Sinh: return {Polynomial{c * k}, Polynomial{-k * k, 0.0, 1.0}};
    }
    return {};
}

/// Termwise table transform, summed over the least common denominator.
inline RationalFunction forward_laplace(const ClosedForm& g) {
    // Fold exp(+-k x) into cosh/sinh when a hyperbolic term of rate k is present,
    // so that distinct table denominators share no roots.
    std::vector<ClosedForm::Term> terms(g.terms().begin(), g.terms().end());
    auto has_hyperbolic = [&](double k) {
        return std::any_of(terms.begin(), terms.end(), [&](const auto& t) {
            return (t.kind == BasisKind::Cosh || t.kind == BasisKind::Sinh) && ClosedForm::same_rate(t.k, k);
        });
    };
    std::vector<ClosedForm::Term> folded;
    for (const auto& t : terms) {
        if (t.kind == BasisKind::Exp && t.k != 0.0 && has_hyperbolic(std::abs(t.k))) {
            const double sign = t.k > 0.0 ? 1.0 : -1.0;
            folded.push_back({t.coeff, BasisKind::Cosh, std::abs(t.k)});
            folded.push_back({sign * t.coeff, BasisKind::Sinh, std::abs(t.k)});
        } else {
            folded.push_back(t);
        }
    }
    const ClosedForm canon(std::move(folded));

    // Group entries by their table denominator: exp -> (p - k), cos/sin -> (p^2 + k^2),
    // cosh/sinh -> (p^2 - k^2).
    struct Group {
        Polynomial den;
        Polynomial num;
    };
    std::vector<Group> groups;
    for (const auto& t : canon.terms()) {
        const RationalFunction entry = table_transform(t);
        auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& grp) { return grp.den == entry.denominator(); });
        if (it == groups.end()) {
            groups.push_back({entry.denominator(), entry.numerator()});
        } else {
            it->num = it->num + entry.numerator();
        }
    }

    Polynomial den{1.0};
    for (const auto& grp : groups) den = den * grp.den;
    Polynomial num;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        Polynomial part = groups[i].num;
        for (std::size_t j = 0; j < groups.size(); ++j)
            if (j != i) part = part * groups[j].den;
        num = num + part;
    }
    return {num, den};
}

}  // namespace fuzzylap
