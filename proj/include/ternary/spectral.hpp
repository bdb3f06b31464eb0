#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ternary {

/// Positive even spectral density m(u) with a declared growth envelope
/// m(u) <= K|u|^{-b} for |u| <= 1 (b < 2) and m(u) <= K|u|^{2N} for |u| > 1.
/// Carries an exact power-law model of its own tail (constant and fBm
/// densities are power laws everywhere; tabulated densities extrapolate
/// their last sample as a constant), which the covariance quadrature
/// integrates in closed form.
class SpectralDensity {
public:
    /// m = 1 (Brownian kernel).
    static SpectralDensity brownian();

    /// m = scale * |u|^{1-2H} for H in (0,1). The calibration that fixes
    /// the scale against K(1,1) = 1 lives in the covariance module.
    static SpectralDensity fbm(double hurst, double scale = 1.0);

    /// Linear interpolation of samples (u_i, m_i), u_i >= 0 increasing,
    /// mirrored evenly; constant extrapolation beyond the last sample.
    static SpectralDensity tabulated(std::vector<std::pair<double, double>> samples);

    /// Custom density with a declared envelope and tail model.
    /// near_zero_b factors m(u) = u^{-near_zero_b} * smooth(u) on (0, 1];
    /// the tail model m(u) = tail_coeff * u^tail_exp must be exact for
    /// u >= tail_start. Rejects envelopes with b >= 2.
    static SpectralDensity from_function(std::function<double(double)> eval,
                                         std::string description, double envelope_k,
                                         double envelope_b, int envelope_n, double tail_coeff,
                                         double tail_exp, double tail_start,
                                         double near_zero_b);

    double operator()(double u) const { return eval_(std::abs(u)); }

    const std::string& description() const { return description_; }

    // declared envelope
    double envelope_k() const { return k_env_; }
    double envelope_b() const { return b_env_; }
    int envelope_n() const { return n_env_; }

    /// Soft sampled check of the declared envelope (recorded, not enforced).
    bool envelope_ok() const { return envelope_ok_; }
    const std::vector<double>& envelope_violations() const { return envelope_violations_; }

    /// Whether int m(u)/(u^2+1) du is finite.
    bool admissible() const { return admissible_; }

    // exact tail model m(u) = tail_coeff * u^tail_exp for u >= tail_start
    double tail_coeff() const { return tail_coeff_; }
    double tail_exp() const { return tail_exp_; }
    double tail_start() const { return tail_start_; }

    // near-zero factorization m(u) = u^{-b} * smooth(u) on (0, 1]
    double near_zero_b() const { return near_zero_b_; }
    double near_zero_smooth(double u) const { return eval_(std::abs(u)) * std::pow(std::abs(u), near_zero_b_); }

private:
    SpectralDensity(std::function<double(double)> eval, std::string description, double k_env,
                    double b_env, int n_env, double tail_coeff, double tail_exp,
                    double tail_start, double near_zero_b);

    void run_envelope_check();

    std::function<double(double)> eval_;
    std::string description_;
    double k_env_ = 1.0;
    double b_env_ = 0.0;
    int n_env_ = 0;
    bool envelope_ok_ = true;
    std::vector<double> envelope_violations_;
    bool admissible_ = true;
    double tail_coeff_ = 1.0;
    double tail_exp_ = 0.0;
    double tail_start_ = 0.0;
    double near_zero_b_ = 0.0;
};

/// Parse a density spec: "bm", "fbm:H=<v>", or "table:<csv path>" with
/// two-column rows u,m and u >= 0.
SpectralDensity parse_density_spec(const std::string& spec);

}  // namespace ternary
