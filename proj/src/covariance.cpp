#include "ternary/covariance.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "ternary/errors.hpp"
#include "ternary/quadrature.hpp"
#include "ternary/sm_op.hpp"

namespace ternary {

namespace {

// [1 - cos(ut) - cos(us) + cos(u(t-s))] evaluated without cancellation.
double bracket(double u, double t, double s) {
    double a = std::sin(0.5 * u * t);
    double b = std::sin(0.5 * u * s);
    double c = std::sin(0.5 * u * (t - s));
    return 2.0 * (a * a + b * b - c * c);
}

}  // namespace

double covariance_quadrature(const SpectralDensity& density, double t, double s,
                             const CovarianceOptions& options) {
    if (density.tail_exp() >= 1.0)
        throw TailDivergenceError("density tail u^" + std::to_string(density.tail_exp()) +
                                  " is not integrable against the kernel");
    if (!density.admissible())
        throw DomainViolationError("density fails the admissibility condition int m/(u^2+1) < inf");
    if (t == 0.0 || s == 0.0) return 0.0;

    const double upper = std::max(options.split_point, density.tail_start());
    const double delta = options.delta;

    // [0, delta]: m = u^{-b} smooth, bracket/u^2 -> t*s
    double head0;
    double b = density.near_zero_b();
    if (b > 0.0) {
        head0 = power_panel(
            [&](double u) { return density.near_zero_smooth(u) * bracket(u, t, s) / (u * u); },
            delta, b);
    } else {
        head0 = power_panel([&](double u) { return density(u) * bracket(u, t, s) / (u * u); },
                            delta, 0.0);
    }

    // [delta, upper] on the graded oscillation-scaled mesh
    double freq = std::max({std::abs(t), std::abs(s), std::abs(t - s), 1.0});
    double head = integrate_panels(
        [&](double u) { return density(u) * bracket(u, t, s) / (u * u); },
        graded_edges(delta, upper, freq));

    // exact power-law tail: int_U^inf (1 - cos ux) u^{a-2} du = x^{1-a} psi_a(Ux)
    double a = density.tail_exp();
    double tail = 0.0;
    for (auto [x, sign] : {std::pair{std::abs(t), 1.0}, std::pair{std::abs(s), 1.0},
                           std::pair{std::abs(t - s), -1.0}}) {
        if (x > 0.0) tail += sign * std::pow(x, 1.0 - a) * psi_tail(a, upper * x);
    }
    tail *= density.tail_coeff();

    return (head0 + head + tail) / M_PI;
}

double covariance_series(const SpectralDensity& density, double t, double s, int orders) {
    if (orders == 0) return 0.0;
    HermiteTransform transform(density, orders);
    std::vector<double> ct = transform.indicator_coeffs(t);
    std::vector<double> cs = t == s ? ct : transform.indicator_coeffs(s);
    double acc = 0.0;
    for (int n = 0; n < orders; ++n)
        acc += ct[static_cast<std::size_t>(n)] * cs[static_cast<std::size_t>(n)];
    return acc;
}

double CovarianceGrid::symmetry_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < s_values.size(); ++i)
        for (std::size_t j = 0; j < t_values.size(); ++j) {
            auto ti = std::find(s_values.begin(), s_values.end(), t_values[j]);
            auto sj = std::find(t_values.begin(), t_values.end(), s_values[i]);
            if (ti == s_values.end() || sj == t_values.end()) continue;
            std::size_t i2 = static_cast<std::size_t>(ti - s_values.begin());
            std::size_t j2 = static_cast<std::size_t>(sj - t_values.begin());
            worst = std::max(worst, std::abs(values[i][j] - values[i2][j2]));
        }
    return worst;
}

double CovarianceGrid::min_eigenvalue() const {
    if (s_values != t_values) throw DomainError("eigenvalue check needs a square grid");
    const auto n = static_cast<Eigen::Index>(s_values.size());
    Eigen::MatrixXd k(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            k(i, j) = values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (k + k.transpose()));
    return solver.eigenvalues().minCoeff();
}

void CovarianceGrid::write_csv(std::ostream& os) const {
    char buf[64];
    os << "s\\t";
    for (double t : t_values) {
        std::snprintf(buf, sizeof(buf), "%.17g", t);
        os << "," << buf;
    }
    os << "\n";
    for (std::size_t i = 0; i < s_values.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", s_values[i]);
        os << buf;
        for (std::size_t j = 0; j < t_values.size(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", values[i][j]);
            os << "," << buf;
        }
        os << "\n";
    }
}

CovarianceGrid build_covariance_grid(const SpectralDensity& density,
                                     const std::vector<double>& t_values,
                                     const std::vector<double>& s_values, CovarianceMode mode,
                                     const CovarianceOptions& options) {
    for (const auto* axis : {&t_values, &s_values}) {
        if (axis->empty()) throw DomainError("covariance grid axes must be nonempty");
        for (std::size_t i = 1; i < axis->size(); ++i)
            if (!((*axis)[i] > (*axis)[i - 1]))
                throw DomainError("covariance grid axes must be strictly increasing");
    }
    CovarianceGrid grid;
    grid.t_values = t_values;
    grid.s_values = s_values;
    grid.values.assign(s_values.size(), std::vector<double>(t_values.size(), 0.0));

    if (mode == CovarianceMode::Series) {
        // coefficient vectors are shared across the grid
        HermiteTransform transform(density, options.series_orders);
        std::vector<std::vector<double>> ct, cs;
        for (double t : t_values) ct.push_back(transform.indicator_coeffs(t));
        for (double s : s_values) cs.push_back(transform.indicator_coeffs(s));
        for (std::size_t i = 0; i < s_values.size(); ++i)
            for (std::size_t j = 0; j < t_values.size(); ++j) {
                double acc = 0.0;
                for (int n = 0; n < options.series_orders; ++n)
                    acc += ct[j][static_cast<std::size_t>(n)] * cs[i][static_cast<std::size_t>(n)];
                grid.values[i][j] = acc;
            }
        return grid;
    }

    // quadrature mode: cells are independent; fan out, results independent
    // of the scheduling because each cell computes in isolation
    const std::size_t cells = s_values.size() * t_values.size();
    unsigned hw = options.threads > 0 ? static_cast<unsigned>(options.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, cells));
    if (workers <= 1) {
        for (std::size_t i = 0; i < s_values.size(); ++i)
            for (std::size_t j = 0; j < t_values.size(); ++j)
                grid.values[i][j] =
                    covariance_quadrature(density, t_values[j], s_values[i], options);
        return grid;
    }
    std::exception_ptr error;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t cell = w; cell < cells; cell += workers) {
                    std::size_t i = cell / t_values.size();
                    std::size_t j = cell % t_values.size();
                    grid.values[i][j] =
                        covariance_quadrature(density, t_values[j], s_values[i], options);
                }
            } catch (...) {
                if (!error) error = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return grid;
}

CalibratedFbm calibrate_fbm(double hurst, const CovarianceOptions& options) {
    SpectralDensity raw = SpectralDensity::fbm(hurst);
    double raw11 = covariance_quadrature(raw, 1.0, 1.0, options);
    double fitted = 1.0 / raw11;
    double analytic = std::tgamma(2.0 * hurst + 1.0) * std::sin(M_PI * hurst) / M_PI;
    return CalibratedFbm{SpectralDensity::fbm(hurst, fitted), fitted, analytic};
}

}  // namespace ternary
