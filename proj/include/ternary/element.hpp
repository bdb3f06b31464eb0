#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <utility>

#include "ternary/exact.hpp"
#include "ternary/multi_index.hpp"

namespace ternary {

template <class C>
struct CoeffTraits;

/// Double-complex coefficients. Terms below the drop threshold are removed
/// during normalization so nilpotent cancellations terminate exactly.
template <>
struct CoeffTraits<std::complex<double>> {
    static constexpr bool exact = false;
    static constexpr double drop_eps = 1e-14;
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> from_int(long n) { return {static_cast<double>(n), 0.0}; }
    static bool is_zero(const std::complex<double>& c) { return std::abs(c) <= drop_eps; }
    static std::complex<double> conj(const std::complex<double>& c) { return std::conj(c); }
    static std::complex<double> times_omega_pow(const std::complex<double>& c, int k) {
        static const std::complex<double> w{-0.5, 0.8660254037844386467637231707529362};
        static const std::complex<double> w2 = w * w;
        switch (((k % 3) + 3) % 3) {
            case 0: return c;
            case 1: return c * w;
            default: return c * w2;
        }
    }
    static std::complex<double> to_complex(const std::complex<double>& c) { return c; }
};

template <>
struct CoeffTraits<ExactComplex> {
    static constexpr bool exact = true;
    static ExactComplex zero() { return ExactComplex::zero(); }
    static ExactComplex one() { return ExactComplex::one(); }
    static ExactComplex from_int(long n) { return ExactComplex(n); }
    static bool is_zero(const ExactComplex& c) { return c.is_zero(); }
    static ExactComplex conj(const ExactComplex& c) { return c.conj(); }
    static ExactComplex times_omega_pow(const ExactComplex& c, int k) {
        return c.times_omega_pow(k);
    }
    static std::complex<double> to_complex(const ExactComplex& c) { return c.to_complex(); }
};

/// Finite sparse sum of basis monomials with coefficients in C. Immutable
/// after construction; every operation returns a fresh value, so elements
/// can be shared freely between threads. Term iteration follows the
/// canonical graded-lexicographic order.
template <class C>
class BasicElement {
public:
    using Coeff = C;
    using Traits = CoeffTraits<C>;
    using TermMap = std::map<MultiIndex, C, GradedLexLess>;

    BasicElement() = default;

    static BasicElement zero() { return {}; }
    static BasicElement one() { return scalar(Traits::one()); }
    static BasicElement scalar(C value) {
        BasicElement z;
        z.set_term(MultiIndex(), std::move(value));
        return z;
    }
    static BasicElement monomial(MultiIndex idx, C value) {
        BasicElement z;
        z.set_term(std::move(idx), std::move(value));
        return z;
    }
    static BasicElement generator(std::uint32_t position, std::uint8_t exponent = 1) {
        return monomial(MultiIndex::unit(position, exponent), Traits::one());
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    C coefficient(const MultiIndex& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? Traits::zero() : it->second;
    }

    /// Scalar part (body): coefficient of the empty index.
    C body() const { return coefficient(MultiIndex()); }

    /// Nilpotent remainder (soul): the element minus its scalar part.
    BasicElement soul() const {
        BasicElement z = *this;
        z.terms_.erase(MultiIndex());
        return z;
    }

    /// Largest occupied generator position over all terms.
    std::uint32_t max_position() const {
        std::uint32_t d = 0;
        for (const auto& [idx, c] : terms_) d = std::max(d, idx.max_position());
        return d;
    }

    /// Accumulate value into the idx term, dropping it when it cancels.
    void accumulate(const MultiIndex& idx, const C& value) {
        auto it = terms_.find(idx);
        if (it == terms_.end()) {
            if (!Traits::is_zero(value)) terms_.emplace(idx, value);
            return;
        }
        it->second = it->second + value;
        if (Traits::is_zero(it->second)) terms_.erase(it);
    }

    void set_term(MultiIndex idx, C value) {
        if (Traits::is_zero(value))
            terms_.erase(idx);
        else
            terms_.insert_or_assign(std::move(idx), std::move(value));
    }

    friend bool operator==(const BasicElement& x, const BasicElement& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const BasicElement& x, const BasicElement& y) { return !(x == y); }

private:
    TermMap terms_;
};

using Element = BasicElement<std::complex<double>>;
using ExactElement = BasicElement<ExactComplex>;

template <class C>
BasicElement<C> add(const BasicElement<C>& x, const BasicElement<C>& y) {
    BasicElement<C> out = x;
    for (const auto& [idx, c] : y.terms()) out.accumulate(idx, c);
    return out;
}

template <class C>
BasicElement<C> neg(const BasicElement<C>& x) {
    BasicElement<C> out;
    for (const auto& [idx, c] : x.terms()) out.set_term(idx, -c);
    return out;
}

template <class C>
BasicElement<C> sub(const BasicElement<C>& x, const BasicElement<C>& y) {
    return add(x, neg(y));
}

template <class C>
BasicElement<C> scale(const C& factor, const BasicElement<C>& x) {
    BasicElement<C> out;
    if (CoeffTraits<C>::is_zero(factor)) return out;
    for (const auto& [idx, c] : x.terms()) {
        C v = factor * c;
        if (!CoeffTraits<C>::is_zero(v)) out.set_term(idx, std::move(v));
    }
    return out;
}

/// Bilinear extension of e^nu e^mu = sigma(nu, mu) e^{nu+mu}.
template <class C>
BasicElement<C> mul(const BasicElement<C>& x, const BasicElement<C>& y) {
    BasicElement<C> out;
    for (const auto& [nu, zc] : x.terms()) {
        for (const auto& [mu, wc] : y.terms()) {
            auto target = MultiIndex::sum(nu, mu);
            if (!target) continue;
            int k = sigma_exponent(nu, mu);
            out.accumulate(*target, CoeffTraits<C>::times_omega_pow(zc * wc, k));
        }
    }
    return out;
}

template <class C>
BasicElement<C> operator+(const BasicElement<C>& x, const BasicElement<C>& y) {
    return add(x, y);
}
template <class C>
BasicElement<C> operator-(const BasicElement<C>& x, const BasicElement<C>& y) {
    return sub(x, y);
}
template <class C>
BasicElement<C> operator-(const BasicElement<C>& x) {
    return neg(x);
}
template <class C>
BasicElement<C> operator*(const BasicElement<C>& x, const BasicElement<C>& y) {
    return mul(x, y);
}
template <class C>
BasicElement<C> operator*(const C& factor, const BasicElement<C>& x) {
    return scale(factor, x);
}

}  // namespace ternary
