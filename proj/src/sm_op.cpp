#include "ternary/sm_op.hpp"

#include <fftw3.h>

#include <cmath>

#include "ternary/errors.hpp"
#include "ternary/hermite.hpp"
#include "ternary/quadrature.hpp"

namespace ternary {

HermiteTransform::HermiteTransform(const SpectralDensity& density, int order_count, int max_order,
                                   double max_time)
    : density_(density), order_count_(order_count), max_order_(max_order), max_time_(max_time) {
    if (order_count < 0 || order_count > max_order + 1)
        throw DomainError("hermite order exceeds the configured maximum");
    double reach = std::sqrt(2.0 * order_count + 1.0);
    edges_ = graded_edges(delta_, reach + 10.0, reach + max_time_);
}

void HermiteTransform::check_range(double t) const {
    if (std::abs(t) > max_time_)
        throw DomainError("time argument outside the configured range");
}

std::vector<double> HermiteTransform::integrate(
    const std::function<double(double)>& even_kernel,
    const std::function<double(double)>& odd_kernel) const {
    std::vector<double> acc(static_cast<std::size_t>(order_count_), 0.0);
    const GaussRule& rule = GaussRule::order30();
    auto accumulate_at = [&](double u, double w) {
        double sm = std::sqrt(density_(u));
        std::vector<double> xi = hermite_xi_all(u, order_count_, max_order_);
        double ke = w * sm * even_kernel(u);
        double ko = w * sm * odd_kernel(u);
        for (int n = 0; n < order_count_; ++n) acc[n] += xi[n] * (n % 2 == 0 ? ke : ko);
    };
    for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
        double mid = 0.5 * (edges_[i] + edges_[i + 1]);
        double half = 0.5 * (edges_[i + 1] - edges_[i]);
        for (std::size_t k = 0; k < rule.nodes.size(); ++k)
            accumulate_at(mid + half * rule.nodes[k], half * rule.weights[k]);
    }
    // [0, delta]: sqrt(m) may carry u^{-b/2}; substitute it away
    double b_half = 0.5 * density_.near_zero_b();
    if (b_half > 0.0) {
        double inv = 1.0 / (1.0 - b_half);
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            double w01 = 0.5 * (rule.nodes[k] + 1.0);
            double u = delta_ * std::pow(w01, inv);
            if (u <= 0.0) continue;
            double jac = 0.5 * std::pow(delta_, 1.0 - b_half) * inv * rule.weights[k];
            double smooth = std::sqrt(density_.near_zero_smooth(u));
            std::vector<double> xi = hermite_xi_all(u, order_count_, max_order_);
            double ke = jac * smooth * even_kernel(u);
            double ko = jac * smooth * odd_kernel(u);
            for (int n = 0; n < order_count_; ++n) acc[n] += xi[n] * (n % 2 == 0 ? ke : ko);
        }
    } else {
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            double u = 0.5 * delta_ * (rule.nodes[k] + 1.0);
            if (u <= 0.0) continue;
            accumulate_at(u, 0.5 * delta_ * rule.weights[k]);
        }
    }
    const double front = 2.0 / std::sqrt(2.0 * M_PI);
    for (int n = 0; n < order_count_; ++n) {
        double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
        acc[n] *= front * sign;
    }
    return acc;
}

std::vector<double> HermiteTransform::sm_values(double x) const {
    check_range(x);
    return integrate([x](double u) { return std::cos(u * x); },
                     [x](double u) { return std::sin(u * x); });
}

std::vector<double> HermiteTransform::indicator_coeffs(double t) const {
    check_range(t);
    return integrate(
        [t](double u) { return std::sin(u * t) / u; },
        [t](double u) {
            double s = std::sin(0.5 * u * t);
            return 2.0 * s * s / u;
        });
}

double indicator_coeff(const SpectralDensity& density, int n, double t, double max_time) {
    HermiteTransform transform(density, n + 1, 512, max_time);
    return transform.indicator_coeffs(t)[static_cast<std::size_t>(n)];
}

SmGridResult apply_sm_grid(const SpectralDensity& density,
                           const std::function<std::complex<double>(double)>& f_hat,
                           double u_max, int points) {
    if (points < 8 || (points & (points - 1)) != 0)
        throw DomainError("grid point count must be a power of two");
    const double du = 2.0 * u_max / points;

    std::vector<std::complex<double>> g(static_cast<std::size_t>(points));
    double weighted_l2 = 0.0;
    double last_octave = 0.0;
    for (int k = 0; k < points; ++k) {
        double u = -u_max + k * du;
        std::complex<double> fh = f_hat(u);
        double m = density(u);
        double cell = m * std::norm(fh) * du;
        weighted_l2 += cell;
        if (std::abs(u) > 0.5 * u_max) last_octave += cell;
        g[static_cast<std::size_t>(k)] = std::sqrt(m) * fh;
    }
    if (!std::isfinite(weighted_l2) || (weighted_l2 > 1e-12 && last_octave > 0.2 * weighted_l2))
        throw DomainViolationError(
            "int m |f_hat|^2 diverges on the grid: f outside dom(S_m) or u_max too small");

    // (S_m f)(x_j) = (du / 2 pi) e^{-i u_max x_j} sum_k [(-1)^k g_k] e^{2 pi i jk / M}
    fftw_complex* buf = fftw_alloc_complex(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        std::complex<double> v = (k % 2 == 0 ? 1.0 : -1.0) * g[static_cast<std::size_t>(k)];
        buf[k][0] = v.real();
        buf[k][1] = v.imag();
    }
    fftw_plan plan = fftw_plan_dft_1d(points, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);

    SmGridResult out;
    out.x.resize(static_cast<std::size_t>(points));
    out.values.resize(static_cast<std::size_t>(points));
    const double dx = 2.0 * M_PI / (points * du);
    for (int j = 0; j < points; ++j) {
        double x = (j - points / 2) * dx;
        out.x[static_cast<std::size_t>(j)] = x;
        std::complex<double> dft(buf[j][0], buf[j][1]);
        std::complex<double> phase = std::exp(std::complex<double>(0.0, -u_max * x));
        out.values[static_cast<std::size_t>(j)] = du / (2.0 * M_PI) * phase * dft;
    }
    fftw_free(buf);
    return out;
}

}  // namespace ternary
