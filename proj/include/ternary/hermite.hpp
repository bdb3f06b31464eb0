#pragma once

#include <vector>

namespace ternary {

/// Normalized Hermite function xi_n(x): xi_0 = pi^{-1/4} exp(-x^2/2) with
/// the stable recurrence xi_{n+1} = sqrt(2/(n+1)) x xi_n - sqrt(n/(n+1)) xi_{n-1}.
/// Orthonormal on L^2(R); values stay bounded for all orders.
double hermite_xi(int n, double x, int max_order = 512);

/// xi_0 .. xi_{count-1} at x in one recurrence sweep.
std::vector<double> hermite_xi_all(double x, int count, int max_order = 512);

/// Evaluation-grid parameters for the Hermite expansion machinery.
struct HermiteBasis {
    int max_order = 512;
    double half_width = 50.0;  // grid domain [-U, U]
    int points = 1 << 14;

    /// Gram matrix of xi_0..xi_{n-1} by wide composite quadrature; used to
    /// confirm orthonormality.
    std::vector<std::vector<double>> gram(int n) const;
};

}  // namespace ternary
