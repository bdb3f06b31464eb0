#include "ternary/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "ternary/errors.hpp"

namespace ternary {

SpectralDensity::SpectralDensity(std::function<double(double)> eval, std::string description,
                                 double k_env, double b_env, int n_env, double tail_coeff,
                                 double tail_exp, double tail_start, double near_zero_b)
    : eval_(std::move(eval)),
      description_(std::move(description)),
      k_env_(k_env),
      b_env_(b_env),
      n_env_(n_env),
      tail_coeff_(tail_coeff),
      tail_exp_(tail_exp),
      tail_start_(tail_start),
      near_zero_b_(near_zero_b) {
    if (b_env_ >= 2.0)
        throw DomainError("spectral density envelope requires b < 2 near the origin");
    // int m/(u^2+1): integrability at 0 needs b < 1, at infinity tail_exp < 1
    admissible_ = near_zero_b_ < 1.0 && tail_exp_ < 1.0;
    run_envelope_check();
}

void SpectralDensity::run_envelope_check() {
    for (double lg = -6.0; lg <= 6.0; lg += 0.25) {
        double u = std::pow(10.0, lg);
        double bound = u <= 1.0 ? k_env_ * std::pow(u, -b_env_)
                                : k_env_ * std::pow(u, 2.0 * n_env_);
        if (eval_(u) > bound * (1.0 + 1e-9)) {
            envelope_ok_ = false;
            envelope_violations_.push_back(u);
        }
    }
}

SpectralDensity SpectralDensity::brownian() {
    return SpectralDensity([](double) { return 1.0; }, "bm", 1.0, 0.0, 0, 1.0, 0.0, 0.0, 0.0);
}

SpectralDensity SpectralDensity::fbm(double hurst, double scale) {
    if (!(hurst > 0.0 && hurst < 1.0)) throw DomainError("fBm requires H in (0,1)");
    if (!(scale > 0.0)) throw DomainError("fBm scale must be positive");
    double a = 1.0 - 2.0 * hurst;
    double b = std::max(-a, 0.0);
    std::ostringstream name;
    name << "fbm:H=" << hurst;
    return SpectralDensity([scale, a](double u) { return scale * std::pow(u, a); }, name.str(),
                           scale, b, a > 0.0 ? 1 : 0, scale, a, 0.0, b);
}

SpectralDensity SpectralDensity::tabulated(std::vector<std::pair<double, double>> samples) {
    if (samples.size() < 2) throw DomainError("tabulated density needs at least two samples");
    std::sort(samples.begin(), samples.end());
    if (samples.front().first < 0.0)
        throw DomainError("tabulated density samples require u >= 0");
    double peak = 0.0;
    for (const auto& [u, m] : samples) {
        if (m < 0.0) throw DomainError("tabulated density must be nonnegative");
        peak = std::max(peak, m);
    }
    double last_u = samples.back().first;
    double last_m = samples.back().second;
    auto table = std::make_shared<std::vector<std::pair<double, double>>>(std::move(samples));
    auto eval = [table, last_u, last_m](double u) {
        const auto& t = *table;
        if (u >= last_u) return last_m;
        if (u <= t.front().first) return t.front().second;
        auto it = std::upper_bound(t.begin(), t.end(), std::make_pair(u, 1e308));
        auto lo = it - 1;
        double w = (u - lo->first) / (it->first - lo->first);
        return lo->second + w * (it->second - lo->second);
    };
    return SpectralDensity(eval, "table", std::max(peak, 1e-300), 0.0, 0, last_m, 0.0, last_u,
                           0.0);
}

SpectralDensity SpectralDensity::from_function(std::function<double(double)> eval,
                                               std::string description, double envelope_k,
                                               double envelope_b, int envelope_n,
                                               double tail_coeff, double tail_exp,
                                               double tail_start, double near_zero_b) {
    return SpectralDensity(std::move(eval), std::move(description), envelope_k, envelope_b,
                           envelope_n, tail_coeff, tail_exp, tail_start, near_zero_b);
}

SpectralDensity parse_density_spec(const std::string& spec) {
    if (spec == "bm") return SpectralDensity::brownian();
    if (spec.rfind("fbm:H=", 0) == 0) {
        double h = std::stod(spec.substr(6));
        return SpectralDensity::fbm(h);
    }
    if (spec.rfind("table:", 0) == 0) {
        std::ifstream in(spec.substr(6));
        if (!in) throw DomainError("cannot open density table: " + spec.substr(6));
        std::vector<std::pair<double, double>> samples;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::replace(line.begin(), line.end(), ',', ' ');
            std::istringstream row(line);
            double u = 0.0, m = 0.0;
            if (row >> u >> m) samples.emplace_back(u, m);
        }
        return SpectralDensity::tabulated(std::move(samples));
    }
    throw DomainError("unknown density spec (expected bm, fbm:H=<v>, or table:<path>): " + spec);
}

}  // namespace ternary
