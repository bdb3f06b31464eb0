#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "ternary/element.hpp"
#include "ternary/spectral.hpp"
#include "ternary/weights.hpp"

namespace ternary {

/// Isometric embedding X: coefficient k (0-based) lands on the grade-1
/// generator e_{k+1}, so |Xf|_2 = |f|_{l2} on the truncation.
Element embed_X(const std::vector<std::complex<double>>& coeffs);

/// Truncated process element F_N(t) = sum_{n<N} indicator_coeff(m,n,t) e_{n+1}.
Element process_element(const SpectralDensity& density, int orders, double t);

/// Candidate derivative D_N(t) = sum_{n<N} (S_m xi_n)(t) e_{n+1}.
Element process_derivative(const SpectralDensity& density, int orders, double t);

struct DiffCheckRow {
    double h;
    double error;  // |(F_N(t+h) - F_N(t))/h - D_N(t)|_{H_{-p}}
};

struct DiffCheckReport {
    double t = 0;
    int orders = 0;
    int p = 0;
    std::vector<DiffCheckRow> rows;

    /// error ratio between consecutive h decades.
    std::vector<double> decay_ratios() const;
    std::string csv() const;
};

/// Finite-difference differentiability probe at steps h in hs; first-order
/// decay of the rows signals the derivative candidate is correct.
DiffCheckReport differentiability_check(const SpectralDensity& density, double t, int p,
                                        const WeightProfile& w, int orders,
                                        const std::vector<double>& hs = {1e-2, 1e-3, 1e-4});

struct ProcessIntegralResult {
    Element value;
    int refinements = 0;       // dyadic halvings performed
    std::size_t nodes = 0;     // node count of the accepted level
    double last_delta = 0;     // H_{-p} distance between the last two levels
    double worst_vage_margin = 0;  // min over nodes of rhs - lhs of the product bound
};

/// Hilbert-space integral int_0^1 Y(t) Fprime(t) dt by midpoint Riemann
/// sums with dyadic refinement until successive sums differ by less than
/// tol in H_{-p} (NoConvergenceError at the cap). Every node is checked
/// against the product bound |Y F'|_{-p} <= C_{p-q}|Y|_{-q}|F'|_{-p}.
ProcessIntegralResult process_integral(const std::function<Element(double)>& y,
                                       const std::function<Element(double)>& fprime, int p,
                                       const WeightProfile& w, double tol = 1e-8,
                                       int max_refinements = 20, int q = -1);

}  // namespace ternary
