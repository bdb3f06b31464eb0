#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "ternary/spectral.hpp"

namespace ternary {

/// Multiplier operator S_m with symbol sqrt(m): hat(S_m f) = sqrt(m) hat(f),
/// Fourier convention hat(f)(u) = int f(x) e^{-iux} dx with the 1/(2 pi)
/// factor on the inverse.
///
/// On Hermite functions the transform is diagonal (hat(xi_n) =
/// sqrt(2 pi) (-i)^n xi_n), so S_m xi_n reduces to a single real integral
///   (S_m xi_n)(x) = (2/sqrt(2 pi)) (-1)^{floor(n/2)}
///                   int_0^inf sqrt(m(u)) xi_n(u) trig_n(u x) du
/// with trig = cos for even n and sin for odd n. All orders n < N share
/// one graded quadrature mesh, so the whole vector costs one sweep. The
/// same mesh serves the indicator coefficients
///   int_0^t (S_m xi_n)(x) dx
/// whose time integral of the trig factor is done in closed form
/// (sin(ut)/u resp. (1-cos(ut))/u); sharing the mesh makes finite
/// differences of the coefficients consistent with the pointwise values.
class HermiteTransform {
public:
    /// The mesh is sized for arguments up to max_time; calls beyond that
    /// range are rejected rather than silently under-resolved.
    HermiteTransform(const SpectralDensity& density, int order_count, int max_order = 512,
                     double max_time = 16.0);

    /// (S_m xi_n)(x) for all n < order_count.
    std::vector<double> sm_values(double x) const;

    /// int_0^t (S_m xi_n)(x) dx for all n < order_count.
    std::vector<double> indicator_coeffs(double t) const;

    int order_count() const { return order_count_; }

private:
    std::vector<double> integrate(const std::function<double(double)>& even_kernel,
                                  const std::function<double(double)>& odd_kernel) const;
    void check_range(double t) const;

    const SpectralDensity& density_;
    int order_count_;
    int max_order_;
    double max_time_;
    std::vector<double> edges_;
    double delta_ = 1e-4;
};

/// int_0^t (S_m xi_n)(u) du; convenience wrapper over HermiteTransform.
/// Rejects |t| beyond max_time.
double indicator_coeff(const SpectralDensity& density, int n, double t, double max_time = 16.0);

/// S_m applied through the uniform grid: samples sqrt(m(u)) f_hat(u) on
/// [-u_max, u_max) and inverse-transforms by FFT. Returns the x grid and
/// the (complex) values of S_m f on it. Throws DomainViolationError when
/// int m |f_hat|^2 diverges numerically on the grid.
struct SmGridResult {
    std::vector<double> x;
    std::vector<std::complex<double>> values;
};

SmGridResult apply_sm_grid(const SpectralDensity& density,
                           const std::function<std::complex<double>(double)>& f_hat,
                           double u_max = 50.0, int points = 1 << 14);

}  // namespace ternary
