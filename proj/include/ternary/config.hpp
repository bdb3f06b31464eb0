#pragma once

#include <string>

namespace ternary {

/// Quadrature/truncation defaults shared by the CLI tools. Loaded from an
/// optional flat key=value file; command-line flags override.
struct Config {
    double inverse_eps = 1e-12;     // non-invertibility floor in float mode
    int hermite_max = 512;          // hard cap on Hermite orders
    int series_orders = 200;        // default Hermite truncation N
    double grid_u_max = 50.0;       // S_m grid half-width
    int grid_points = 1 << 14;      // S_m grid size
    double cov_split = 20.0;        // analytic-tail split point
    double cov_delta = 1e-6;        // near-zero panel width
    double max_time = 16.0;         // allowed |t| for process coefficients
    int threads = 0;                // 0 = hardware concurrency

    /// Parse `key=value` lines ('#' comments, blank lines ignored).
    static Config load(const std::string& path);
};

}  // namespace ternary
