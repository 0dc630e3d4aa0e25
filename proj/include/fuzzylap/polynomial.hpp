#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "fuzzylap/errors.hpp"

namespace fuzzylap {

using Complex = std::complex<double>;

/// Real polynomial in the transform variable p, coefficients in ascending powers.
/// Trailing zeros are trimmed on construction; the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(double v) { return Polynomial{v}; }
    /// p - root
    static Polynomial linear_factor(double root) { return Polynomial{-root, 1.0}; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const double> coefficients() const noexcept { return coeffs_; }
    double operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0.0; }
    double leading() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

    template <typename T>
    T operator()(T p) const {
        T acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * p + T(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<double> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
        return Polynomial(std::move(d));
    }

    /// Largest coefficient magnitude.
    double norm_inf() const noexcept {
        double m = 0.0;
        for (double c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<double> s(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] + b[i];
        return Polynomial(std::move(s));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }
    friend Polynomial operator*(double s, const Polynomial& a) {
        std::vector<double> c(a.coeffs_);
        for (double& v : c) v *= s;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
    }

    std::vector<double> coeffs_;
};

/// Ascending coefficients of prod (p - z_i), in complex arithmetic.
inline std::vector<Complex> expand_roots(std::span<const Complex> roots) {
    std::vector<Complex> c{Complex(1.0)};
    for (const Complex& z : roots) {
        std::vector<Complex> next(c.size() + 1, Complex(0.0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= z * c[i];
        }
        c = std::move(next);
    }
    return c;
}

struct Root {
    Complex value;
    int multiplicity = 1;
};

namespace detail {

// Roots that differ by less than this (relative to the root scale) count as repeated.
inline constexpr double kRootSeparation = 1e-9;
// Real or imaginary parts below this fraction of the root scale are snapped to zero.
inline constexpr double kRootSnap = 1e-12;

inline Complex snap(Complex z, double scale) {
    const double eps = kRootSnap * std::max(scale, 1.0);
    return {std::abs(z.real()) <= eps ? 0.0 : z.real(), std::abs(z.imag()) <= eps ? 0.0 : z.imag()};
}

/// Real quadratic, keeping conjugate pairs exactly conjugate.
inline std::pair<Complex, Complex> real_quadratic(double c2, double c1, double c0) {
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (c1 + std::copysign(sq, c1));
        if (q == 0.0) return {Complex(0.0), Complex(0.0)};
        return {Complex(q / c2), Complex(c0 / q)};
    }
    const double re = -c1 / (2.0 * c2);
    const double im = std::sqrt(-disc) / (2.0 * std::abs(c2));
    return {Complex(re, im), Complex(re, -im)};
}

/// One real root of a real cubic by Cardano / the trigonometric form.
inline double cubic_real_root(double c3, double c2, double c1, double c0) {
    const double a = c2 / c3, b = c1 / c3, c = c0 / c3;
    // depressed t^3 + P t + Q with p = t - a/3
    const double P = b - a * a / 3.0;
    const double Q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const double delta = Q * Q / 4.0 + P * P * P / 27.0;
    double t;
    if (delta > 0.0) {
        // A + B with A B = -P/3; taking A from the non-cancelling sum avoids
        // the loss of precision in cbrt(-Q/2 - sqrt(delta)) when P is small
        const double sq = std::sqrt(delta);
        const double A = -std::copysign(std::cbrt(std::abs(Q) / 2.0 + sq), Q);
        t = A == 0.0 ? 0.0 : A - P / (3.0 * A);
    } else if (P == 0.0) {
        t = std::cbrt(-Q);
    } else {
        // three real roots; take the one of largest magnitude for stable deflation
        const double m = 2.0 * std::sqrt(-P / 3.0);
        const double arg = std::clamp(3.0 * Q / (P * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        double best = 0.0;
        for (int k = 0; k < 3; ++k) {
            const double tk = m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
            if (std::abs(tk) > std::abs(best)) best = tk;
        }
        t = best;
    }
    return t - a / 3.0;
}

}  // namespace detail

/// Closed-form roots of a polynomial of degree 1..4 with distinct roots.
///
/// Degree 3 uses Cardano with deflation; degree 4 is accepted when it is
/// biquadratic (odd coefficients zero) or has a zero constant term. Repeated
/// roots and general quartics throw UnsupportedProblem.
inline std::vector<Root> roots(const Polynomial& d) {
    const int n = d.degree();
    if (n < 1 || n > 4) {
        throw UnsupportedProblem("root extraction supports degree 1..4, got degree " + std::to_string(n));
    }
    std::vector<Complex> found;
    switch (n) {
        case 1:
            found.emplace_back(-d[0] / d[1]);
            break;
        case 2: {
            auto [z1, z2] = detail::real_quadratic(d[2], d[1], d[0]);
            found = {z1, z2};
            break;
        }
        case 3: {
            if (d[0] == 0.0) {
                auto [z1, z2] = detail::real_quadratic(d[3], d[2], d[1]);
                found = {Complex(0.0), z1, z2};
            } else {
                const double z = detail::cubic_real_root(d[3], d[2], d[1], d[0]);
                // synthetic division by (p - z)
                const double q2 = d[3];
                const double q1 = d[2] + z * q2;
                const double q0 = d[1] + z * q1;
                auto [z1, z2] = detail::real_quadratic(q2, q1, q0);
                found = {Complex(z), z1, z2};
            }
            break;
        }
        case 4: {
            if (d[1] == 0.0 && d[3] == 0.0) {
                auto [q1, q2] = detail::real_quadratic(d[4], d[2], d[0]);
                for (Complex q : {q1, q2}) {
                    Complex s = q.imag() == 0.0 && q.real() >= 0.0 ? Complex(std::sqrt(q.real()))
                                : q.imag() == 0.0                 ? Complex(0.0, std::sqrt(-q.real()))
                                                                  : std::sqrt(q);
                    found.push_back(s);
                    found.push_back(-s);
                }
            } else if (d[0] == 0.0) {
                found.emplace_back(0.0);
                for (const Root& r : roots(Polynomial{d[1], d[2], d[3], d[4]})) found.push_back(r.value);
            } else {
                throw UnsupportedProblem("quartic denominators must be biquadratic (no odd powers)");
            }
            break;
        }
    }

    double scale = 0.0;
    for (const Complex& z : found) scale = std::max(scale, std::abs(z));
    for (Complex& z : found) z = detail::snap(z, scale);

    const double sep = detail::kRootSeparation * std::max(scale, 1.0);
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t j = i + 1; j < found.size(); ++j) {
            if (std::abs(found[i] - found[j]) <= sep) {
                throw UnsupportedProblem("repeated root near p = " + std::to_string(found[i].real()) +
                                         (found[i].imag() != 0.0 ? "+" + std::to_string(found[i].imag()) + "i" : "") +
                                         " (resonant case is not handled)");
            }
        }
    }

    std::vector<Root> out;
    out.reserve(found.size());
    for (const Complex& z : found) out.push_back({z, 1});
    return out;
}

}  // namespace fuzzylap
