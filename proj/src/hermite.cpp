#include "ternary/hermite.hpp"

#include <cmath>

#include "ternary/errors.hpp"
#include "ternary/quadrature.hpp"

namespace ternary {

namespace {
const double kXi0Norm = std::pow(M_PI, -0.25);
}

double hermite_xi(int n, double x, int max_order) {
    if (n < 0) throw DomainError("hermite order must be nonnegative");
    if (n > max_order) throw DomainError("hermite order exceeds the configured maximum");
    double prev = 0.0;
    double cur = kXi0Norm * std::exp(-0.5 * x * x);
    for (int k = 0; k < n; ++k) {
        double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(k / (k + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> hermite_xi_all(double x, int count, int max_order) {
    if (count < 0 || count > max_order + 1)
        throw DomainError("hermite order exceeds the configured maximum");
    std::vector<double> out(static_cast<std::size_t>(count));
    if (count == 0) return out;
    out[0] = kXi0Norm * std::exp(-0.5 * x * x);
    if (count > 1) out[1] = std::sqrt(2.0) * x * out[0];
    for (int n = 1; n + 1 < count; ++n)
        out[n + 1] = std::sqrt(2.0 / (n + 1)) * x * out[n] - std::sqrt(n / (n + 1.0)) * out[n - 1];
    return out;
}

std::vector<std::vector<double>> HermiteBasis::gram(int n) const {
    double limit = std::sqrt(2.0 * n + 1.0) + 12.0;
    std::vector<double> edges;
    int panels = static_cast<int>(std::ceil(2.0 * limit * (std::sqrt(2.0 * n + 1.0) + 2.0) / 3.0));
    panels = std::max(panels, 64);
    for (int i = 0; i <= panels; ++i)
        edges.push_back(-limit + 2.0 * limit * static_cast<double>(i) / panels);

    std::vector<std::vector<double>> g(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    const GaussRule& rule = GaussRule::order30();
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        double mid = 0.5 * (edges[p] + edges[p + 1]);
        double half = 0.5 * (edges[p + 1] - edges[p]);
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            double x = mid + half * rule.nodes[k];
            double w = half * rule.weights[k];
            std::vector<double> xi = hermite_xi_all(x, n, max_order);
            for (int a = 0; a < n; ++a)
                for (int b = a; b < n; ++b) g[a][b] += w * xi[a] * xi[b];
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < a; ++b) g[a][b] = g[b][a];
    return g;
}

}  // namespace ternary
