#include "ternary/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>

#include "ternary/errors.hpp"

namespace ternary {

const GaussRule& GaussRule::order30() {
    static const GaussRule rule = [] {
        GaussRule r;
        gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(30);
        for (std::size_t i = 0; i < 30; ++i) {
            double x = 0.0, w = 0.0;
            gsl_integration_glfixed_point(-1.0, 1.0, i, &x, &w, t);
            r.nodes.push_back(x);
            r.weights.push_back(w);
        }
        gsl_integration_glfixed_table_free(t);
        return r;
    }();
    return rule;
}

double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& edges) {
    const GaussRule& rule = GaussRule::order30();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        double mid = 0.5 * (edges[i] + edges[i + 1]);
        double half = 0.5 * (edges[i + 1] - edges[i]);
        double acc = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k)
            acc += rule.weights[k] * f(mid + half * rule.nodes[k]);
        total += half * acc;
    }
    return total;
}

std::vector<double> graded_edges(double delta, double upper, double freq) {
    if (!(delta < upper)) throw DomainError("graded mesh requires delta < upper");
    std::vector<double> edges{delta};
    double c = delta;
    double knee = std::min(1.0, upper);
    while (c < knee) {
        c = std::min(c * 4.0, knee);
        edges.push_back(c);
    }
    double base = edges.back();
    if (upper > base) {
        double width = M_PI / (2.0 * std::max(freq, 1.0));
        int n = std::max(4, static_cast<int>(std::ceil((upper - base) / width)));
        for (int i = 1; i <= n; ++i)
            edges.push_back(base + (upper - base) * static_cast<double>(i) / n);
    }
    return edges;
}

namespace {

constexpr double kAsymptoticSwitch = 100.0;

// int_y^inf v^{a-2} cos v dv by six integration-by-parts levels; valid for
// y >= kAsymptoticSwitch where the dropped remainder is ~1e-11.
double phi_ibp(double a, double y) {
    double val = 0.0;
    double p = a - 2.0;
    double coef = 1.0;
    bool cos_mode = true;
    for (int level = 0; level < 6; ++level) {
        if (cos_mode) {
            val += coef * (-std::pow(y, p) * std::sin(y));
            coef *= -p;
        } else {
            val += coef * (std::pow(y, p) * std::cos(y));
            coef *= p;
        }
        p -= 1.0;
        cos_mode = !cos_mode;
    }
    return val;
}

double psi_large(double a, double y) {
    return std::pow(y, a - 1.0) / (1.0 - a) - phi_ibp(a, y);
}

}  // namespace

double psi_tail(double a, double y) {
    if (a >= 1.0) throw DomainError("psi tail requires exponent a < 1");
    if (y < 0.0) throw DomainError("psi tail requires y >= 0");
    if (y >= kAsymptoticSwitch) return psi_large(a, y);
    double lo = std::max(y, 1e-8);
    // [0, 1e-8]: integrand ~ v^a / 2
    double head = y < 1e-8 ? 0.5 * std::pow(lo, a + 1.0) / (a + 1.0) : 0.0;
    auto f = [a](double v) {
        double s = std::sin(0.5 * v);
        return 2.0 * s * s * std::pow(v, a - 2.0);
    };
    double mid = integrate_panels(f, graded_edges(lo, kAsymptoticSwitch, 1.0));
    return head + mid + psi_large(a, kAsymptoticSwitch);
}

double power_panel(const std::function<double(double)>& h, double delta, double b) {
    if (b < 0.0 || b >= 1.0) throw DomainError("power panel requires 0 <= b < 1");
    const GaussRule& rule = GaussRule::order30();
    double acc = 0.0;
    if (b == 0.0) {
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            double u = 0.5 * delta * (rule.nodes[k] + 1.0);
            if (u <= 0.0) continue;
            acc += rule.weights[k] * h(u);
        }
        return 0.5 * delta * acc;
    }
    double inv = 1.0 / (1.0 - b);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        double w = 0.5 * (rule.nodes[k] + 1.0);
        double u = delta * std::pow(w, inv);
        if (u <= 0.0) continue;
        acc += rule.weights[k] * h(u);
    }
    return 0.5 * std::pow(delta, 1.0 - b) * inv * acc;
}

}  // namespace ternary
