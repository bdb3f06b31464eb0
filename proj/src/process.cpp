#include "ternary/process.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ternary/algebra.hpp"
#include "ternary/errors.hpp"
#include "ternary/sm_op.hpp"

namespace ternary {

Element embed_X(const std::vector<std::complex<double>>& coeffs) {
    Element z;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        z.accumulate(MultiIndex::unit(static_cast<std::uint32_t>(k + 1)), coeffs[k]);
    return z;
}

namespace {
Element from_real_coeffs(const std::vector<double>& coeffs) {
    Element z;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        z.accumulate(MultiIndex::unit(static_cast<std::uint32_t>(k + 1)),
                     std::complex<double>(coeffs[k], 0.0));
    return z;
}
}  // namespace

Element process_element(const SpectralDensity& density, int orders, double t) {
    if (orders == 0) return Element::zero();
    return from_real_coeffs(HermiteTransform(density, orders).indicator_coeffs(t));
}

Element process_derivative(const SpectralDensity& density, int orders, double t) {
    if (orders == 0) return Element::zero();
    return from_real_coeffs(HermiteTransform(density, orders).sm_values(t));
}

std::vector<double> DiffCheckReport::decay_ratios() const {
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        out.push_back(rows[i].error / rows[i + 1].error);
    return out;
}

std::string DiffCheckReport::csv() const {
    std::ostringstream os;
    os << "h,error\n";
    char buf[80];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", row.h, row.error);
        os << buf;
    }
    return os.str();
}

DiffCheckReport differentiability_check(const SpectralDensity& density, double t, int p,
                                        const WeightProfile& w, int orders,
                                        const std::vector<double>& hs) {
    DiffCheckReport report;
    report.t = t;
    report.orders = orders;
    report.p = p;
    if (orders == 0) {
        for (double h : hs) report.rows.push_back({h, 0.0});
        return report;
    }
    // one shared transform: the coefficient integrals and the pointwise
    // derivative values must live on the same mesh for the difference
    // quotient to cancel the quadrature bias
    HermiteTransform transform(density, orders);
    Element base = from_real_coeffs(transform.indicator_coeffs(t));
    Element deriv = from_real_coeffs(transform.sm_values(t));
    for (double h : hs) {
        Element shifted = from_real_coeffs(transform.indicator_coeffs(t + h));
        Element quotient = scale(std::complex<double>(1.0 / h, 0.0), sub(shifted, base));
        report.rows.push_back({h, h_norm(sub(quotient, deriv), -p, w)});
    }
    return report;
}

ProcessIntegralResult process_integral(const std::function<Element(double)>& y,
                                       const std::function<Element(double)>& fprime, int p,
                                       const WeightProfile& w, double tol, int max_refinements,
                                       int q) {
    if (q < 0) q = p - 1;
    if (q < 0 || q >= p) throw DomainError("process integral requires 0 <= q < p");

    ProcessIntegralResult result;
    result.worst_vage_margin = std::numeric_limits<double>::infinity();
    double constant = 0.0;
    bool have_constant = false;

    auto midpoint_sum = [&](std::size_t n) {
        Element acc;
        double dt = 1.0 / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            double ti = (static_cast<double>(i) + 0.5) * dt;
            Element yi = y(ti);
            Element fi = fprime(ti);
            Element prod = mul(yi, fi);
            if (!have_constant) {
                int d = static_cast<int>(std::max(yi.max_position(), fi.max_position())) + 2;
                constant = vage_constant(p - q, d, w);
                have_constant = true;
            }
            double margin =
                constant * h_norm(yi, -q, w) * h_norm(fi, -p, w) - h_norm(prod, -p, w);
            result.worst_vage_margin = std::min(result.worst_vage_margin, margin);
            acc = add(acc, scale(std::complex<double>(dt, 0.0), prod));
        }
        return acc;
    };

    std::size_t n = 8;
    Element prev = midpoint_sum(n);
    for (int r = 1; r <= max_refinements; ++r) {
        n *= 2;
        Element cur = midpoint_sum(n);
        double delta = h_norm(sub(cur, prev), -p, w);
        if (delta < tol) {
            result.value = cur;
            result.refinements = r;
            result.nodes = n;
            result.last_delta = delta;
            return result;
        }
        prev = cur;
    }
    throw NoConvergenceError("Riemann refinement cap reached before meeting the tolerance");
}

}  // namespace ternary
