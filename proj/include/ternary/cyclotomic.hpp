#pragma once

#include <complex>
#include <cstdint>
#include <ostream>

namespace ternary {

/// Exact element of Z[w], w = exp(2*pi*i/3), stored as a + b*w.
/// Reduction rule: w^2 = -1 - w. The zero value doubles as the
/// annihilation case of the structure phase sigma.
class Cyclotomic {
public:
    constexpr Cyclotomic() = default;
    constexpr Cyclotomic(std::int64_t a, std::int64_t b) : a_(a), b_(b) {}

    static constexpr Cyclotomic zero() { return {0, 0}; }
    static constexpr Cyclotomic one() { return {1, 0}; }
    static constexpr Cyclotomic omega() { return {0, 1}; }

    /// w^k for any integer k (reduced mod 3).
    static constexpr Cyclotomic omega_pow(std::int64_t k) {
        switch (((k % 3) + 3) % 3) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            default: return {-1, -1};  // w^2 = -1 - w
        }
    }

    constexpr std::int64_t a() const { return a_; }
    constexpr std::int64_t b() const { return b_; }
    constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend constexpr Cyclotomic operator+(Cyclotomic x, Cyclotomic y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend constexpr Cyclotomic operator-(Cyclotomic x, Cyclotomic y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend constexpr Cyclotomic operator-(Cyclotomic x) { return {-x.a_, -x.b_}; }
    friend constexpr Cyclotomic operator*(Cyclotomic x, Cyclotomic y) {
        // (a1 + b1 w)(a2 + b2 w), w^2 = -1 - w
        return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ - x.b_ * y.b_};
    }
    friend constexpr bool operator==(Cyclotomic x, Cyclotomic y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend constexpr bool operator!=(Cyclotomic x, Cyclotomic y) { return !(x == y); }

    /// Complex conjugate: conj(w) = w^2.
    constexpr Cyclotomic conj() const { return {a_ - b_, -b_}; }

    std::complex<double> to_complex() const {
        static const std::complex<double> w{-0.5, 0.8660254037844386467637231707529362};
        return std::complex<double>(static_cast<double>(a_)) + static_cast<double>(b_) * w;
    }

    /// For nonzero phases w^k, the exponent k in {0,1,2}; -1 otherwise.
    constexpr int phase_exponent() const {
        if (a_ == 1 && b_ == 0) return 0;
        if (a_ == 0 && b_ == 1) return 1;
        if (a_ == -1 && b_ == -1) return 2;
        return -1;
    }

    friend std::ostream& operator<<(std::ostream& os, Cyclotomic c) {
        switch (c.phase_exponent()) {
            case 0: return os << "1";
            case 1: return os << "w";
            case 2: return os << "w^2";
            default: break;
        }
        if (c.is_zero()) return os << "0";
        return os << c.a_ << (c.b_ >= 0 ? "+" : "") << c.b_ << "w";
    }

private:
    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
};

}  // namespace ternary
