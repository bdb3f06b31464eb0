#include "ternary/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "ternary/algebra.hpp"
#include "ternary/errors.hpp"

namespace ternary {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double coeff_abs(const std::complex<double>& c) { return std::abs(c); }
double coeff_abs(const ExactComplex& c) { return std::abs(c.to_complex()); }

template <class C>
double p_norm_impl(const BasicElement<C>& z, double p) {
    if (p < 1.0) throw DomainError("p-norm requires p >= 1");
    double acc = 0.0;
    for (const auto& [idx, c] : z.terms()) acc += std::pow(coeff_abs(c), p);
    return std::pow(acc, 1.0 / p);
}

template <class C>
double h_norm_impl(const BasicElement<C>& z, int p, const WeightProfile& w) {
    // log-sum-exp over term logs 2 log|z_nu| + 2 p log c_nu
    double max_log = -kInf;
    std::vector<double> logs;
    logs.reserve(z.terms().size());
    for (const auto& [idx, c] : z.terms()) {
        double a = coeff_abs(c);
        if (a == 0.0) continue;
        double lw = w.log_weight(idx);
        double term = 2.0 * std::log(a) + (p == 0 ? 0.0 : 2.0 * p * lw);
        logs.push_back(term);
        max_log = std::max(max_log, term);
    }
    if (logs.empty() || max_log == -kInf) return 0.0;
    if (max_log == kInf) throw OverflowError("weighted norm overflows the floating range");
    double s = 0.0;
    for (double t : logs) s += std::exp(t - max_log);
    double log_sq = max_log + std::log(s);
    if (0.5 * log_sq > std::log(std::numeric_limits<double>::max()))
        throw OverflowError("weighted norm overflows the floating range");
    return std::exp(0.5 * log_sq);
}

}  // namespace

WeightProfile::WeightProfile(std::function<double(double)> gauge, std::string name)
    : gauge_(std::move(gauge)), name_(std::move(name)) {}

WeightProfile WeightProfile::identity() {
    return WeightProfile([](double x) { return x; }, "identity");
}

WeightProfile WeightProfile::with_gauge(std::function<double(double)> gauge, std::string name) {
    if (gauge(0.0) != 0.0) throw DomainError("gauge must satisfy phi(0) = 0");
    const double samples[] = {0.5, 1.0, 3.0, 9.0, 81.0, 6561.0, 1e6};
    double prev = 0.0;
    for (double x : samples) {
        double v = gauge(x);
        if (!(v > prev)) throw DomainError("gauge must be strictly increasing");
        prev = v;
    }
    for (double a : samples)
        for (double b : samples) {
            double lhs = gauge(a) + gauge(b);
            double rhs = gauge(a + b);
            if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(rhs)))
                throw DomainError("gauge must be additive: phi(a) + phi(b) = phi(a+b)");
        }
    return WeightProfile(std::move(gauge), std::move(name));
}

double WeightProfile::log_weight(const MultiIndex& nu) const {
    double acc = 0.0;
    for (const auto& [pos, exp] : nu.entries()) {
        double scale = std::pow(3.0, static_cast<double>(pos - 1));
        double arg = scale * static_cast<double>(exp);
        if (!std::isfinite(arg)) return kInf;
        acc += gauge_(arg);
        if (!std::isfinite(acc)) return kInf;
    }
    return acc;
}

double WeightProfile::weight(const MultiIndex& nu) const { return std::exp(log_weight(nu)); }

double p_norm(const Element& z, double p) { return p_norm_impl(z, p); }
double p_norm(const ExactElement& z, double p) { return p_norm_impl(z, p); }
double h_norm(const Element& z, int p, const WeightProfile& w) { return h_norm_impl(z, p, w); }
double h_norm(const ExactElement& z, int p, const WeightProfile& w) {
    return h_norm_impl(z, p, w);
}

double vage_closed_bound(int gap) {
    if (gap < 1) throw DomainError("gap must be a positive integer");
    double e = std::exp(-2.0 * gap);
    return (1.0 - e) / (1.0 - 2.0 * e);
}

namespace {

double slot_factor(int gap, int k, const WeightProfile& w) {
    double scale = std::pow(3.0, static_cast<double>(k - 1));
    double f = 1.0;
    f += std::exp(-2.0 * gap * w.gauge(scale));
    f += std::exp(-2.0 * gap * w.gauge(2.0 * scale));
    return f;
}

}  // namespace

double vage_partial_sum(int gap, int truncation_d, const WeightProfile& w) {
    if (gap < 1) throw DomainError("gap must be a positive integer");
    double prod = 1.0;
    for (int k = 1; k <= truncation_d; ++k) prod *= slot_factor(gap, k, w);
    return prod;
}

double vage_constant(int gap, int truncation_d, const WeightProfile& w) {
    double partial = vage_partial_sum(gap, truncation_d, w);
    double tail_mult = 1.0;
    for (int k = truncation_d + 1; k <= truncation_d + 64; ++k) {
        double f = slot_factor(gap, k, w);
        tail_mult *= f;
        if (f == 1.0) break;
    }
    return std::sqrt(partial * tail_mult);
}

std::string VageReport::csv_header() { return "lhs,rhs,constant,margin,holds"; }

std::string VageReport::csv_row() const {
    char buf[200];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%d", lhs, rhs, constant, margin,
                  holds ? 1 : 0);
    return buf;
}

VageReport check_vage(const Element& f, const Element& g, int p, int q, const WeightProfile& w) {
    if (p <= q) throw DomainError("vage check requires p > q");
    int d = static_cast<int>(std::max(f.max_position(), g.max_position())) + 2;
    VageReport r;
    r.constant = vage_constant(p - q, d, w);
    r.lhs = h_norm(mul(f, g), -p, w);
    r.lhs_mirrored = h_norm(mul(g, f), -p, w);
    r.rhs = r.constant * h_norm(f, -q, w) * h_norm(g, -p, w);
    r.margin = r.rhs - std::max(r.lhs, r.lhs_mirrored);
    r.holds = r.margin >= -1e-12 * std::max(1.0, r.rhs);
    return r;
}

Element power_series_apply(const std::function<std::complex<double>(int)>& alpha, double radius,
                           const Element& f, int p, const WeightProfile& w, double tol) {
    int d = static_cast<int>(f.max_position()) + 2;
    double c2 = vage_constant(2, d, w);
    double guard = radius / c2;
    double nf = h_norm(f, -p, w);
    double b0 = std::abs(f.body());
    if (!(nf < guard) && !(b0 < guard))
        throw DivergenceGuardError("power series guard: |f|_{H_-p} and |body(f)| both exceed R/C2");

    const int cap = 10 * nilpotency_index(f);
    // nilpotent arguments sum exactly: their tail dies identically, and an
    // early weighted-norm stop would drop live high-position terms
    const bool nilpotent = b0 <= CoeffTraits<std::complex<double>>::drop_eps;
    Element acc = scale(alpha(0), Element::one());
    Element power = Element::one();
    for (int n = 1; n <= cap; ++n) {
        power = mul(power, f);
        if (power.is_zero()) break;
        Element term = scale(alpha(n), power);
        acc = add(acc, term);
        if (!nilpotent && h_norm(term, -p - 2, w) < tol) break;
    }
    return acc;
}

}  // namespace ternary
