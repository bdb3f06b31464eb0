#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "ternary/element.hpp"

namespace ternary {

/// Weight family c_nu = exp(sum_k phi(3^{k-1} nu_k)) parameterized by an
/// additive gauge phi. The defaults use phi(x) = x. Gauges are validated at
/// construction: phi(0) = 0, additivity phi(a) + phi(b) = phi(a+b) and
/// monotonicity, sampled over several decades. All arithmetic stays in the
/// log domain since c_nu overflows double precision from position 7 on.
class WeightProfile {
public:
    static WeightProfile identity();
    static WeightProfile with_gauge(std::function<double(double)> gauge, std::string name);

    double gauge(double x) const { return gauge_(x); }
    const std::string& name() const { return name_; }

    /// log c_nu = sum_k phi(3^{k-1} nu_k); +inf when out of double range.
    double log_weight(const MultiIndex& nu) const;

    /// c_nu itself when representable, +inf otherwise.
    double weight(const MultiIndex& nu) const;

private:
    WeightProfile(std::function<double(double)> gauge, std::string name);
    std::function<double(double)> gauge_;
    std::string name_;
};

/// p-norm (sum |z_nu|^p)^(1/p); rejects p < 1.
double p_norm(const Element& z, double p);
double p_norm(const ExactElement& z, double p);

/// Weighted norm sqrt(sum |z_nu|^2 c_nu^{2p}) at the signed scale index p
/// (negative p is the distribution side H_{-|p|}). Log-domain accumulation;
/// throws OverflowError when a positive-p norm leaves the double range.
double h_norm(const Element& z, int p, const WeightProfile& w);
double h_norm(const ExactElement& z, int p, const WeightProfile& w);

/// Closed-form bound (1 - e^{-2g}) / (1 - 2 e^{-2g}) on sum_nu c_nu^{-2g}.
double vage_closed_bound(int gap);

/// Partial sum of c_nu^{-2 gap} over indices supported in 1..truncation_d,
/// evaluated as a product over slots.
double vage_partial_sum(int gap, int truncation_d, const WeightProfile& w);

/// Constant C_gap = sqrt(partial sum + analytic tail) controlling
/// |fg|_{-p} <= C_{p-q} |f|_{-q} |g|_{-p}. The tail multiplies in the
/// (fast-converging) factors for slots beyond truncation_d.
double vage_constant(int gap, int truncation_d, const WeightProfile& w);

struct VageReport {
    double lhs = 0;          // |fg|_{H_{-p}}
    double lhs_mirrored = 0; // |gf|_{H_{-p}}
    double rhs = 0;          // C_{p-q} |f|_{H_{-q}} |g|_{H_{-p}}
    double constant = 0;
    double margin = 0;       // rhs - max(lhs, lhs_mirrored)
    bool holds = false;

    /// Flat CSV row (lhs, rhs, constant, margin, holds).
    std::string csv_row() const;
    static std::string csv_header();
};

/// Checks the product inequality in H_{-p} for f in H_{-q}, g in H_{-p},
/// p > q, on both orders fg and gf with the same constant.
VageReport check_vage(const Element& f, const Element& g, int p, int q, const WeightProfile& w);

/// Evaluates sum_n alpha(n) f^n. Convergence guard: |f|_{H_{-p}} < R/C_2 or
/// |body(f)| < R/C_2; otherwise DivergenceGuardError. The sum stops once the
/// term norm in H_{-p-2} falls below tol or after 10 * nilpotency_index(f)
/// terms.
Element power_series_apply(const std::function<std::complex<double>(int)>& alpha, double radius,
                           const Element& f, int p, const WeightProfile& w, double tol = 1e-12);

}  // namespace ternary
