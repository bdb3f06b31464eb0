#pragma once

#include <vector>

#include "ternary/element.hpp"

namespace ternary {

/// Left multiplication M_nu: e^mu -> sigma(nu, mu) e^{nu+mu}, extended
/// linearly; slots that overflow past exponent 2 vanish. M_0 is the
/// identity, and M_f 1 = f.
template <class C>
BasicElement<C> mul_op(const MultiIndex& nu, const BasicElement<C>& g) {
    BasicElement<C> out;
    for (const auto& [mu, c] : g.terms()) {
        auto target = MultiIndex::sum(nu, mu);
        if (!target) continue;
        out.accumulate(*target, CoeffTraits<C>::times_omega_pow(c, sigma_exponent(nu, mu)));
    }
    return out;
}

/// l2 adjoint M*_nu: e^mu -> conj(sigma(nu, mu-nu)) e^{mu-nu}; terms where
/// mu - nu leaves the index set are dropped.
template <class C>
BasicElement<C> adjoint_op(const MultiIndex& nu, const BasicElement<C>& g) {
    BasicElement<C> out;
    for (const auto& [mu, c] : g.terms()) {
        auto target = MultiIndex::difference(mu, nu);
        if (!target) continue;
        int k = sigma_exponent(nu, *target);
        out.accumulate(*target, CoeffTraits<C>::times_omega_pow(c, (3 - k) % 3));
    }
    return out;
}

/// Berezin integral against e^nu, defined as the adjoint multiplication
/// operator applied to g.
template <class C>
BasicElement<C> berezin_integral(const MultiIndex& nu, const BasicElement<C>& g) {
    return adjoint_op(nu, g);
}

/// M*_f g = sum conj(f_nu) g_mu conj(sigma(nu, mu-nu)) e^{mu-nu};
/// in particular M*_f 1 = conj(body(f)).
template <class C>
BasicElement<C> adjoint_full(const BasicElement<C>& f, const BasicElement<C>& g) {
    BasicElement<C> out;
    for (const auto& [nu, fc] : f.terms()) {
        C cf = CoeffTraits<C>::conj(fc);
        for (const auto& [mu, gc] : g.terms()) {
            auto target = MultiIndex::difference(mu, nu);
            if (!target) continue;
            int k = sigma_exponent(nu, *target);
            out.accumulate(*target, CoeffTraits<C>::times_omega_pow(cf * gc, (3 - k) % 3));
        }
    }
    return out;
}

/// A monomial operator: left multiplication M_nu by e^nu, or its l2
/// adjoint M*_nu. The empty index acts as the identity in both kinds, and
/// composite indices factor into single-slot operators (increasing
/// position order for M, reversed for M*).
struct MonomialOperator {
    enum class Kind { LeftMul, Adjoint };
    Kind kind = Kind::LeftMul;
    MultiIndex index;

    template <class C>
    BasicElement<C> apply(const BasicElement<C>& g) const {
        return kind == Kind::LeftMul ? mul_op(index, g) : adjoint_op(index, g);
    }

    MonomialOperator adjoint() const {
        return {kind == Kind::LeftMul ? Kind::Adjoint : Kind::LeftMul, index};
    }
};

/// Diagnostic: basis terms of g annihilated by left multiplication with f
/// (every product against f's support overflows an exponent slot).
template <class C>
std::vector<MultiIndex> annihilated_terms(const BasicElement<C>& f, const BasicElement<C>& g) {
    std::vector<MultiIndex> killed;
    for (const auto& [mu, gc] : g.terms()) {
        bool survives = false;
        for (const auto& [nu, fc] : f.terms())
            if (MultiIndex::sum(nu, mu)) {
                survives = true;
                break;
            }
        if (!survives) killed.push_back(mu);
    }
    return killed;
}

}  // namespace ternary
