#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "ternary/algebra.hpp"

namespace ternary::laws {

/// Random exact element: up to max_terms monomials supported in positions
/// 1..max_pos, coefficients small Gaussian rationals with occasional w
/// factors. unit_body forces the scalar part to 1.
ExactElement random_element(std::mt19937_64& rng, int max_pos, int max_terms,
                            bool unit_body = false);

/// Random element of pure grade 1 supported in 1..max_pos.
ExactElement random_vector(std::mt19937_64& rng, int max_pos);

struct Failure {
    std::string law;
    std::string detail;
};

struct Options {
    std::uint64_t seed = 1;
    int trials = 100;
};

using MulFn = std::function<ExactElement(const ExactElement&, const ExactElement&)>;

/// Runs the exact-mode law suite (associativity, generator relations, cube
/// nilpotency, ternary form, conjugation and inverse identities, sigma
/// cocycle, grade additivity, projector and decomposition laws) against a
/// pluggable product. Returns the first counterexample, if any.
std::optional<Failure> run_suite(const Options& options, const MulFn& multiply);

inline std::optional<Failure> run_suite(const Options& options) {
    return run_suite(options, [](const ExactElement& x, const ExactElement& y) {
        return mul(x, y);
    });
}

}  // namespace ternary::laws
