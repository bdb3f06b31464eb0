#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ternary/algebra.hpp"
#include "ternary/weights.hpp"

using namespace ternary;

namespace {

Element e(std::uint32_t p, std::uint8_t k = 1) { return Element::generator(p, k); }

Element random_element(std::mt19937_64& rng, int max_pos, int max_terms) {
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_int_distribution<int> exp_dist(0, 2);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    Element z;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<MultiIndex::Entry> entries;
        for (int p = 1; p <= max_pos; ++p) {
            int ex = exp_dist(rng);
            if (ex > 0 && std::uniform_int_distribution<int>(0, 1)(rng) == 0)
                entries.emplace_back(static_cast<std::uint32_t>(p), static_cast<std::uint8_t>(ex));
        }
        z.accumulate(MultiIndex::from_entries(std::move(entries)), {coeff(rng), coeff(rng)});
    }
    return z;
}

}  // namespace

TEST_CASE("weight profile basics") {
    WeightProfile w = WeightProfile::identity();
    CHECK(w.log_weight(MultiIndex()) == 0.0);  // c_0 = 1
    CHECK(w.log_weight(MultiIndex::unit(1)) == doctest::Approx(1.0));
    CHECK(w.log_weight(MultiIndex::unit(1, 2)) == doctest::Approx(2.0));
    CHECK(w.log_weight(MultiIndex::unit(3)) == doctest::Approx(9.0));

    // additivity on admissible sums
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<int> pos(1, 6);
        MultiIndex a = MultiIndex::unit(static_cast<std::uint32_t>(pos(rng)));
        MultiIndex b = MultiIndex::unit(static_cast<std::uint32_t>(pos(rng)));
        auto sum = MultiIndex::sum(a, b);
        if (!sum) continue;
        CHECK(w.log_weight(a) + w.log_weight(b) == doctest::Approx(w.log_weight(*sum)));
    }
}

TEST_CASE("gauge validation") {
    CHECK_NOTHROW(WeightProfile::with_gauge([](double x) { return 2.0 * x; }, "double"));
    CHECK_THROWS_AS(WeightProfile::with_gauge([](double x) { return x * x; }, "square"),
                    DomainError);
    CHECK_THROWS_AS(WeightProfile::with_gauge([](double x) { return x + 1.0; }, "affine"),
                    DomainError);
    CHECK_THROWS_AS(WeightProfile::with_gauge([](double x) { return -x; }, "negative"),
                    DomainError);
}

TEST_CASE("p-norm examples") {
    CHECK(p_norm(add(e(1), e(2)), 1.0) == doctest::Approx(2.0));
    CHECK(p_norm(scale(std::complex<double>(3.0, 0.0), e(1)), 2.0) == doctest::Approx(3.0));
    CHECK_THROWS_AS(p_norm(e(1), 0.5), DomainError);
}

TEST_CASE("1-norm is submultiplicative") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        Element z = random_element(rng, 4, 4);
        Element w = random_element(rng, 4, 4);
        CHECK(p_norm(mul(z, w), 1.0) <= p_norm(z, 1.0) * p_norm(w, 1.0) * (1.0 + 1e-12) + 1e-12);
    }
}

TEST_CASE("p-norm product inequality as printed, p = 2 and 3") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Element z = random_element(rng, 4, 4);
        Element w = random_element(rng, 4, 4);
        for (int p = 2; p <= 3; ++p) {
            double lhs = std::pow(p_norm(mul(z, w), p), p);
            double rhs = std::pow(p_norm(z, 1.0), p) * p_norm(w, std::pow(2.0, p - 1));
            for (int k = 1; k <= p - 1; ++k) rhs *= p_norm(w, std::pow(2.0, k));
            CHECK(lhs <= rhs * (1.0 + 1e-12) + 1e-12);
            // mirrored form
            double lhs2 = lhs;
            double rhs2 = std::pow(p_norm(w, 1.0), p) * p_norm(z, std::pow(2.0, p - 1));
            for (int k = 1; k <= p - 1; ++k) rhs2 *= p_norm(z, std::pow(2.0, k));
            CHECK(lhs2 <= rhs2 * (1.0 + 1e-12) + 1e-12);
        }
    }
}

TEST_CASE("weighted norm examples") {
    WeightProfile w = WeightProfile::identity();
    CHECK(h_norm(Element::one(), 3, w) == doctest::Approx(1.0));
    CHECK(h_norm(Element::one(), -5, w) == doctest::Approx(1.0));
    CHECK(h_norm(e(1), -1, w) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(h_norm(Element::zero(), -2, w) == 0.0);
}

TEST_CASE("weighted norm overflow is signalled") {
    WeightProfile w = WeightProfile::identity();
    Element far = e(40);  // log weight 3^39, far past double range after exp
    CHECK_THROWS_AS(h_norm(far, 2, w), OverflowError);
    CHECK(h_norm(far, -2, w) == 0.0);  // distribution side underflows to zero instead
}

TEST_CASE("norm ladder is monotone and converges to the body") {
    WeightProfile w = WeightProfile::identity();
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        Element f = random_element(rng, 4, 5);
        double prev = h_norm(f, -1, w);
        for (int p = 2; p <= 40; ++p) {
            double cur = h_norm(f, -p, w);
            CHECK(cur <= prev * (1.0 + 1e-12));
            prev = cur;
        }
        CHECK(std::abs(prev - std::abs(f.body())) < 1e-10);
    }
}

TEST_CASE("closed-form bound values") {
    CHECK(vage_closed_bound(1) == doctest::Approx(1.1855612525908628).epsilon(1e-14));
    CHECK(vage_closed_bound(2) == doctest::Approx(1.0190120755077861).epsilon(1e-14));
    CHECK(std::sqrt(vage_closed_bound(1)) == doctest::Approx(1.08884).epsilon(1e-4));
    CHECK(std::sqrt(vage_closed_bound(2)) == doctest::Approx(1.00946).epsilon(1e-4));
}

TEST_CASE("partial weight sums increase in d and stay below the closed bound") {
    WeightProfile w = WeightProfile::identity();
    for (int gap = 1; gap <= 4; ++gap) {
        double prev = 0.0;
        for (int d = 1; d <= 8; ++d) {
            double s = vage_partial_sum(gap, d, w);
            CHECK(s >= prev);
            if (d <= 2) CHECK(s > prev);  // saturates at double precision beyond
            CHECK(s < vage_closed_bound(gap));
            prev = s;
        }
        CHECK(vage_constant(gap, 8, w) <= std::sqrt(vage_closed_bound(gap)));
    }
}

TEST_CASE("vage inequality on random pairs") {
    WeightProfile w = WeightProfile::identity();
    std::mt19937_64 rng(13);

    Element one = Element::one();
    VageReport trivial = check_vage(one, one, 2, 1, w);
    CHECK(trivial.holds);
    CHECK(trivial.lhs == doctest::Approx(1.0));

    for (int t = 0; t < 300; ++t) {
        Element f = random_element(rng, 4, 5);
        Element g = random_element(rng, 4, 5);
        VageReport r = check_vage(f, g, 3, 1, w);
        CHECK(r.holds);
        CHECK(r.margin >= -1e-12);
        // |fg| = |gf| in every weighted norm
        CHECK(r.lhs == doctest::Approx(r.lhs_mirrored).epsilon(1e-10));
    }

    CHECK_THROWS_AS(check_vage(one, one, 1, 1, w), DomainError);
}

TEST_CASE("vage report serializes flat") {
    WeightProfile w = WeightProfile::identity();
    VageReport r = check_vage(e(1), e(2), 2, 1, w);
    CHECK(VageReport::csv_header() == "lhs,rhs,constant,margin,holds");
    std::string row = r.csv_row();
    CHECK(std::count(row.begin(), row.end(), ',') == 4);
    CHECK(row.back() == '1');
}

TEST_CASE("power series: exponential of a nilpotent argument truncates") {
    WeightProfile w = WeightProfile::identity();
    auto exp_coeffs = [](int n) {
        double f = 1.0;
        for (int k = 2; k <= n; ++k) f *= k;
        return std::complex<double>(1.0 / f, 0.0);
    };
    Element result = power_series_apply(exp_coeffs, 1e9, e(1), 2, w);
    CHECK(std::abs(result.body() - 1.0) < 1e-12);
    CHECK(std::abs(result.coefficient(MultiIndex::unit(1)) - 1.0) < 1e-12);
    CHECK(std::abs(result.coefficient(MultiIndex::unit(1, 2)) - 0.5) < 1e-12);
    CHECK(result.term_count() == 3);
}

TEST_CASE("power series: geometric series reproduces the inverse") {
    WeightProfile w = WeightProfile::identity();
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        Element f = random_element(rng, 3, 4);
        f.set_term(MultiIndex(), {1.0, 0.0});  // body 1
        Element arg = sub(Element::one(), f);  // body 0, scalar criterion applies
        Element series =
            power_series_apply([](int) { return std::complex<double>(1.0, 0.0); }, 1.0, arg, 2, w);
        Element expect = inverse(f);
        Element diff = sub(series, expect);
        CHECK(p_norm(diff, 2.0) < 1e-9);
    }
}

TEST_CASE("power series guard rejects divergent input") {
    WeightProfile w = WeightProfile::identity();
    Element big = add(Element::scalar({50.0, 0.0}), e(1));
    CHECK_THROWS_AS(
        power_series_apply([](int) { return std::complex<double>(1.0, 0.0); }, 1.0, big, 2, w),
        DivergenceGuardError);
}

TEST_CASE("power norm growth |f^n| <= C2^(n-1) |f|^n") {
    WeightProfile w = WeightProfile::identity();
    std::mt19937_64 rng(19);
    for (int t = 0; t < 50; ++t) {
        Element f = random_element(rng, 4, 4);
        int d = static_cast<int>(f.max_position()) + 2;
        double c2 = vage_constant(2, d, w);
        double nf = h_norm(f, -2, w);
        Element power = Element::one();
        for (int n = 1; n <= 6; ++n) {
            power = mul(power, f);
            double lhs = h_norm(power, -4, w);
            double rhs = std::pow(c2, n - 1) * std::pow(nf, n);
            CHECK(lhs <= rhs * (1.0 + 1e-10) + 1e-12);
        }
    }
}
