#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ternary/spectral.hpp"

namespace ternary {

struct CovarianceOptions {
    double split_point = 20.0;  // analytic power-law tail beyond max(split, tail_start)
    double delta = 1e-6;        // width of the near-zero panel
    int series_orders = 200;    // Hermite truncation for series mode
    int threads = 0;            // 0 = hardware concurrency
};

/// Spectral covariance kernel
///   K(t,s) = (1/2pi) int_R (e^{iut}-1)(e^{-ius}-1) u^{-2} m(u) du
/// by quadrature: stable bracket integrand over [delta, U] on a graded
/// oscillation-scaled mesh, a power-law-weighted panel on [0, delta], and
/// the exact power-law tail beyond U expressed through psi_tail. Requires
/// an admissible density; a tail model with exponent >= 1 throws
/// TailDivergenceError.
double covariance_quadrature(const SpectralDensity& density, double t, double s,
                             const CovarianceOptions& options = {});

/// Fock-expansion partial sum sum_{n<N} coeff(n,t) coeff(n,s) of the same
/// kernel through the Hermite indicator coefficients.
double covariance_series(const SpectralDensity& density, double t, double s, int orders);

/// Sampled kernel on a t x s grid.
struct CovarianceGrid {
    std::vector<double> t_values;
    std::vector<double> s_values;
    std::vector<std::vector<double>> values;  // values[i][j] = K(t_j, s_i)

    /// max |K(t,s) - K(s,t)| over shared grid points.
    double symmetry_defect() const;

    /// Smallest eigenvalue of the sampled matrix (square symmetric grids).
    double min_eigenvalue() const;

    /// CSV: header `s\t` then t values; one row per s; 17 significant digits.
    void write_csv(std::ostream& os) const;
};

enum class CovarianceMode { Quadrature, Series };

/// Evaluates the kernel over the grid; cells are independent and fan out
/// over threads, each cell's quadrature self-contained.
CovarianceGrid build_covariance_grid(const SpectralDensity& density,
                                     const std::vector<double>& t_values,
                                     const std::vector<double>& s_values, CovarianceMode mode,
                                     const CovarianceOptions& options = {});

/// fBm density with the scale fitted so K(1,1) = 1, alongside the analytic
/// candidate Gamma(2H+1) sin(pi H) / pi. The two differ by a convention
/// factor (the 1/2pi of the kernel versus the plain spectral measure), so
/// the fitted value is reported rather than silently replaced.
struct CalibratedFbm {
    SpectralDensity density;
    double fitted_scale;
    double analytic_candidate;
};

CalibratedFbm calibrate_fbm(double hurst, const CovarianceOptions& options = {});

}  // namespace ternary
