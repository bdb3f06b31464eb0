#pragma once

#include <array>
#include <complex>
#include <cstdlib>

#include "ternary/element.hpp"
#include "ternary/errors.hpp"

namespace ternary {

/// Projection [z]_k onto the blade of total degree k. Summing over all k
/// reconstructs z.
template <class C>
BasicElement<C> grade_project(const BasicElement<C>& z, int k) {
    if (k < 0) throw DomainError("grade index must be nonnegative");
    BasicElement<C> out;
    for (const auto& [idx, c] : z.terms())
        if (idx.degree() == k) out.set_term(idx, c);
    return out;
}

/// Component of the Z_3 decomposition: terms with |nu| = k (mod 3).
template <class C>
BasicElement<C> z3_component(const BasicElement<C>& z, int k) {
    if (k < 0 || k > 2) throw DomainError("Z_3 component index must be 0, 1 or 2");
    BasicElement<C> out;
    for (const auto& [idx, c] : z.terms())
        if (idx.degree() % 3 == k) out.set_term(idx, c);
    return out;
}

template <class C>
C body(const BasicElement<C>& z) {
    return z.body();
}

template <class C>
BasicElement<C> soul(const BasicElement<C>& z) {
    return z.soul();
}

/// Six-term ternary form T(e_i, e_j, e_k) built from generator products.
/// Vanishes identically; kept as a named law check.
template <class C = ExactComplex>
BasicElement<C> ternary_form(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    if (i == 0 || !(i <= j && j <= k)) throw DomainError("ternary form requires 1 <= i <= j <= k");
    auto e = [](std::uint32_t p) { return BasicElement<C>::generator(p); };
    std::array<std::array<std::uint32_t, 3>, 6> perms = {
        {{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}}};
    BasicElement<C> out;
    for (const auto& p : perms) out = add(out, mul(mul(e(p[0]), e(p[1])), e(p[2])));
    return out;
}

/// Pseudo-conjugation: coefficients conjugate, e^nu maps to
/// sigma(nu,nu) e^{2 nu} when nu has only unit exponents and to 0 otherwise.
template <class C>
BasicElement<C> conj(const BasicElement<C>& z) {
    BasicElement<C> out;
    for (const auto& [idx, c] : z.terms()) {
        bool killed = false;
        for (const auto& [pos, exp] : idx.entries())
            if (exp == 2) {
                killed = true;
                break;
            }
        if (killed) continue;
        int k = sigma_exponent(idx, idx);
        out.accumulate(idx.doubled(),
                       CoeffTraits<C>::times_omega_pow(CoeffTraits<C>::conj(c), k));
    }
    return out;
}

/// P_n: keeps the terms supported on positions 1..d-n. Requires the input
/// supported within 1..d and 0 <= n <= d. P_d recovers the scalar part.
template <class C>
BasicElement<C> project_Pn(const BasicElement<C>& z, int n, int d) {
    if (d < 0 || n < 0 || n > d) throw DomainError("projector requires 0 <= n <= d");
    if (z.max_position() > static_cast<std::uint32_t>(d))
        throw DomainError("element support exceeds the declared dimension");
    BasicElement<C> out;
    const std::uint32_t keep = static_cast<std::uint32_t>(d - n);
    for (const auto& [idx, c] : z.terms())
        if (idx.max_position() <= keep) out.set_term(idx, c);
    return out;
}

/// The nilpotent monomial I_n = e_{d-n+1}^2 ... e_d^2.
template <class C = ExactComplex>
BasicElement<C> projector_monomial(int n, int d) {
    if (n < 1 || n > d) throw DomainError("projector monomial requires 1 <= n <= d");
    std::vector<MultiIndex::Entry> entries;
    for (int p = d - n + 1; p <= d; ++p)
        entries.emplace_back(static_cast<std::uint32_t>(p), 2);
    return BasicElement<C>::monomial(MultiIndex::from_entries(std::move(entries)),
                                     CoeffTraits<C>::one());
}

/// Least m >= 1 with soul(z)^m = 0, found by iterated multiplication with
/// early exit. Bounded by 2*max_position + 1.
template <class C>
int nilpotency_index(const BasicElement<C>& z) {
    BasicElement<C> s = z.soul();
    if (s.is_zero()) return 1;
    const int bound = 2 * static_cast<int>(z.max_position()) + 1;
    BasicElement<C> power = s;
    int m = 1;
    while (!power.is_zero()) {
        power = mul(power, s);
        ++m;
        if (m > bound) throw DomainError("nilpotency bound exceeded");
    }
    return m;
}

namespace detail {
inline bool invertible_body(const ExactComplex& b, double) { return !b.is_zero(); }
inline bool invertible_body(const std::complex<double>& b, double eps) {
    return std::abs(b) > eps;
}
inline ExactComplex coeff_inverse(const ExactComplex& c) { return c.inverse(); }
inline std::complex<double> coeff_inverse(const std::complex<double>& c) { return 1.0 / c; }
}  // namespace detail

/// Neumann inverse: 1/z0 - soul/z0^2 + soul^2/z0^3 - ..., a finite sum of
/// length nilpotency_index(z). Throws NotInvertibleError when the scalar
/// part vanishes (floor eps_inv in floating mode).
template <class C>
BasicElement<C> inverse(const BasicElement<C>& z, double eps_inv = 1e-12) {
    C b = z.body();
    if (!detail::invertible_body(b, eps_inv)) throw NotInvertibleError();
    C inv_b = detail::coeff_inverse(b);
    BasicElement<C> s = z.soul();
    BasicElement<C> out = BasicElement<C>::scalar(inv_b);
    BasicElement<C> power = BasicElement<C>::one();
    C factor = inv_b;
    const int m = nilpotency_index(z);
    for (int k = 1; k < m; ++k) {
        power = mul(power, s);
        factor = -(factor * inv_b);
        out = add(out, scale(factor, power));
    }
    return out;
}

/// l2 pairing sum z_nu * conj(w_nu): linear in the first slot, conjugate
/// linear in the second.
template <class C>
C l2_inner(const BasicElement<C>& z, const BasicElement<C>& w) {
    C acc = CoeffTraits<C>::zero();
    for (const auto& [idx, c] : z.terms()) {
        auto it = w.terms().find(idx);
        if (it != w.terms().end()) acc = acc + c * CoeffTraits<C>::conj(it->second);
    }
    return acc;
}

/// Cube of a grade-1 element; equal to zero by the cube-nilpotency law.
/// Rejects inputs with terms outside grade 1.
template <class C>
BasicElement<C> cube_of_vector(const BasicElement<C>& z) {
    if (!(z == grade_project(z, 1))) throw DomainError("cube law requires a grade-1 element");
    return mul(mul(z, z), z);
}

/// Split z = A + B e_d + C e_d^2 by the exponent of the last position d.
template <class C>
struct LastSlotDecomposition {
    BasicElement<C> a, b, c;
};

template <class C>
LastSlotDecomposition<C> decompose_last(const BasicElement<C>& z, std::uint32_t d) {
    if (z.max_position() > d) throw DomainError("element support exceeds the declared dimension");
    LastSlotDecomposition<C> out;
    for (const auto& [idx, coeff] : z.terms()) {
        int e = idx.exponent_at(d);
        MultiIndex rest = *MultiIndex::difference(idx, e == 0 ? MultiIndex()
                                                              : MultiIndex::unit(d, static_cast<std::uint8_t>(e)));
        if (e == 0)
            out.a.set_term(rest, coeff);
        else if (e == 1)
            out.b.set_term(rest, coeff);
        else
            out.c.set_term(rest, coeff);
    }
    return out;
}

/// Twist A' with a_nu -> a_nu * w^{|nu|}; satisfies A e_d = e_d A' for A
/// supported below position d.
template <class C>
BasicElement<C> grade_twist(const BasicElement<C>& z) {
    BasicElement<C> out;
    for (const auto& [idx, c] : z.terms())
        out.set_term(idx, CoeffTraits<C>::times_omega_pow(c, idx.degree()));
    return out;
}

}  // namespace ternary
