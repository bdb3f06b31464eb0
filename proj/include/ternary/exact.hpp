#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

#include "ternary/cyclotomic.hpp"

namespace ternary {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// a + b*i with rational a, b. Closed under the four field operations.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(long n) : re(n), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    /// re^2 + im^2, rational and exact.
    Rational norm() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
    friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
        Rational n = y.norm();
        return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
    }
    friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const GaussianRational& x, const GaussianRational& y) {
        return !(x == y);
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

/// Exact coefficient field Q(i, w): value = a + b*w with Gaussian-rational
/// a, b and w = exp(2*pi*i/3). Contains all structure phases and is closed
/// under complex conjugation, so every algebra law of the core can be
/// checked with exact equality.
struct ExactComplex {
    GaussianRational a;  // 1-component
    GaussianRational b;  // w-component

    ExactComplex() = default;
    ExactComplex(GaussianRational a_, GaussianRational b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit ExactComplex(long n) : a(n), b(0) {}

    static ExactComplex zero() { return ExactComplex(0); }
    static ExactComplex one() { return ExactComplex(1); }
    static ExactComplex i() { return {{Rational(0), Rational(1)}, GaussianRational(0)}; }
    static ExactComplex omega() { return {GaussianRational(0), GaussianRational(1)}; }
    static ExactComplex from_rational(Rational q) {
        return {{std::move(q), Rational(0)}, GaussianRational(0)};
    }
    static ExactComplex from_cyclotomic(Cyclotomic c) {
        return {GaussianRational(static_cast<long>(c.a())),
                GaussianRational(static_cast<long>(c.b()))};
    }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend ExactComplex operator+(const ExactComplex& x, const ExactComplex& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend ExactComplex operator-(const ExactComplex& x, const ExactComplex& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend ExactComplex operator-(const ExactComplex& x) { return {-x.a, -x.b}; }
    friend ExactComplex operator*(const ExactComplex& x, const ExactComplex& y) {
        // (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    friend ExactComplex operator/(const ExactComplex& x, const ExactComplex& y) {
        return x * y.inverse();
    }
    friend bool operator==(const ExactComplex& x, const ExactComplex& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const ExactComplex& x, const ExactComplex& y) { return !(x == y); }

    /// conj(a + b w) = conj(a) + conj(b) w^2 = (conj(a) - conj(b)) - conj(b) w.
    ExactComplex conj() const {
        GaussianRational cb = b.conj();
        return {a.conj() - cb, -cb};
    }

    /// Field inverse; the norm form a^2 - a b + b^2 vanishes only at 0.
    ExactComplex inverse() const {
        GaussianRational d = a * a - a * b + b * b;
        return {(a - b) / d, -(b / d)};
    }

    /// Exact multiplication by w^k.
    ExactComplex times_omega_pow(int k) const {
        switch (((k % 3) + 3) % 3) {
            case 0: return *this;
            case 1: return {-b, a - b};       // (a + b w) w = -b + (a - b) w
            default: return {b - a, -a};      // (a + b w) w^2
        }
    }

    std::complex<double> to_complex() const {
        static const std::complex<double> w{-0.5, 0.8660254037844386467637231707529362};
        return a.to_complex() + b.to_complex() * w;
    }
};

}  // namespace ternary
