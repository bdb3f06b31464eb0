#pragma once

#include <functional>
#include <vector>

namespace ternary {

/// Fixed Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    /// Shared 30-point rule (machine accurate on a half-oscillation panel).
    static const GaussRule& order30();
};

/// Integrate f over consecutive panels [edges[i], edges[i+1]].
double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& edges);

/// Panel mesh for integrands with power-law roughness at 0 and oscillation
/// scale `freq` further out: geometric refinement delta..1, then uniform
/// panels of width ~pi/(2 freq) up to upper.
std::vector<double> graded_edges(double delta, double upper, double freq);

/// Psi_a(y) = int_y^inf (1 - cos v) v^{a-2} dv for a < 1, y >= 0.
/// Large y uses a six-term integration-by-parts expansion; smaller y adds
/// the numerically integrated midrange.
double psi_tail(double a, double y);

/// int_0^delta u^{-b} h(u) du for smooth h and 0 <= b < 1, via the
/// substitution u = delta w^{1/(1-b)} (plain panel when b = 0).
double power_panel(const std::function<double(double)>& h, double delta, double b);

}  // namespace ternary
