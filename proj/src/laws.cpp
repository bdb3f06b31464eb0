#include "ternary/laws.hpp"

#include <sstream>

#include "ternary/serialize.hpp"

namespace ternary::laws {

namespace {

ExactComplex random_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<int> wpow(0, 5);
    ExactComplex c{{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))},
                   GaussianRational(0)};
    int k = wpow(rng);
    if (k < 3) c = c.times_omega_pow(k);
    return c;
}

MultiIndex random_index(std::mt19937_64& rng, int max_pos) {
    std::uniform_int_distribution<int> exp_dist(0, 2);
    std::vector<MultiIndex::Entry> entries;
    for (int p = 1; p <= max_pos; ++p) {
        int e = exp_dist(rng);
        if (e > 0 && std::uniform_int_distribution<int>(0, 1)(rng) == 0)
            entries.emplace_back(static_cast<std::uint32_t>(p), static_cast<std::uint8_t>(e));
    }
    return MultiIndex::from_entries(std::move(entries));
}

std::string show(const ExactElement& z) {
    std::ostringstream os;
    os << to_text(z);
    return os.str();
}

}  // namespace

ExactElement random_element(std::mt19937_64& rng, int max_pos, int max_terms, bool unit_body) {
    ExactElement z;
    std::uniform_int_distribution<int> nterms(1, max_terms);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        ExactComplex c = random_coeff(rng);
        if (c.is_zero()) continue;
        z.accumulate(random_index(rng, max_pos), c);
    }
    if (unit_body) z.set_term(MultiIndex(), ExactComplex::one());
    return z;
}

ExactElement random_vector(std::mt19937_64& rng, int max_pos) {
    ExactElement z;
    for (int p = 1; p <= max_pos; ++p) {
        ExactComplex c = random_coeff(rng);
        if (!c.is_zero()) z.accumulate(MultiIndex::unit(static_cast<std::uint32_t>(p)), c);
    }
    if (z.is_zero()) z = ExactElement::generator(1);
    return z;
}

std::optional<Failure> run_suite(const Options& options, const MulFn& multiply) {
    std::mt19937_64 rng(options.seed);
    auto e = [](std::uint32_t p, std::uint8_t k = 1) { return ExactElement::generator(p, k); };

    // Generator relations and cube nilpotency, fixed small dimensions.
    if (options.trials > 0) {
        for (std::uint32_t i = 1; i <= 6; ++i) {
            if (!multiply(multiply(e(i), e(i)), e(i)).is_zero())
                return Failure{"generator-cube", "e[" + std::to_string(i) + "]^3 != 0"};
            for (std::uint32_t j = i + 1; j <= 6; ++j) {
                ExactElement lhs = multiply(e(i), e(j));
                ExactElement rhs = scale(ExactComplex::omega(), multiply(e(j), e(i)));
                if (lhs != rhs)
                    return Failure{"generator-relation",
                                   "e[" + std::to_string(i) + "]*e[" + std::to_string(j) +
                                       "] != w*e[" + std::to_string(j) + "]*e[" +
                                       std::to_string(i) + "]"};
            }
        }
        for (std::uint32_t i = 1; i <= 6; ++i)
            for (std::uint32_t j = i; j <= 6; ++j)
                for (std::uint32_t k = j; k <= 6; ++k) {
                    std::array<std::array<std::uint32_t, 3>, 6> perms = {
                        {{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}}};
                    ExactElement form;
                    for (const auto& p : perms)
                        form = add(form, multiply(multiply(e(p[0]), e(p[1])), e(p[2])));
                    if (!form.is_zero())
                        return Failure{"ternary-form",
                                       "T(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                           std::to_string(k) + ") != 0"};
                }
    }

    for (int t = 0; t < options.trials; ++t) {
        ExactElement a = random_element(rng, 5, 4);
        ExactElement b = random_element(rng, 5, 4);
        ExactElement c = random_element(rng, 5, 4);

        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
            return Failure{"associativity",
                           "a=" + show(a) + "  b=" + show(b) + "  c=" + show(c)};

        // sigma cocycle on admissible index triples
        MultiIndex nu = random_index(rng, 4);
        MultiIndex muu = random_index(rng, 4);
        MultiIndex ga = random_index(rng, 4);
        auto numu = MultiIndex::sum(nu, muu);
        if (numu) {
            auto total = MultiIndex::sum(*numu, ga);
            if (total) {
                auto muga = MultiIndex::sum(muu, ga);
                Cyclotomic lhs = sigma(nu, muu) * sigma(*numu, ga);
                Cyclotomic rhs = sigma(muu, ga) * sigma(nu, *muga);
                if (lhs != rhs) return Failure{"sigma-cocycle", "indices drawn at trial " +
                                                                    std::to_string(t)};
            }
        }

        // grade additivity on pure grades
        ExactElement za = random_element(rng, 4, 4);
        int ka = std::uniform_int_distribution<int>(0, 4)(rng);
        int kb = std::uniform_int_distribution<int>(0, 4)(rng);
        ExactElement pa = grade_project(za, ka);
        ExactElement pb = grade_project(random_element(rng, 4, 4), kb);
        ExactElement prod = multiply(pa, pb);
        if (grade_project(prod, ka + kb) != prod)
            return Failure{"grade-additivity", "grades " + std::to_string(ka) + "+" +
                                                   std::to_string(kb)};

        // Z_3 components multiply additively mod 3
        ExactElement g1 = z3_component(a, 1);
        ExactElement g2 = z3_component(b, 2);
        ExactElement p12 = multiply(g1, g2);
        if (z3_component(p12, 0) != p12) return Failure{"z3-grading", "G^1 * G^2 not in G^0"};

        // cube law for grade-1 elements
        ExactElement v = random_vector(rng, 6);
        if (!multiply(multiply(v, v), v).is_zero())
            return Failure{"vector-cube", "v=" + show(v)};

        // conjugation identities
        ExactElement cc = conj(conj(a));
        if (!cc.soul().is_zero() || cc.body() != a.body())
            return Failure{"conj-involution-body", "z=" + show(a)};
        ExactComplex b0 = a.body();
        ExactComplex expect = b0 * b0.conj();
        if (body(multiply(a, conj(a))) != expect || body(multiply(conj(a), a)) != expect)
            return Failure{"conj-body-norm", "z=" + show(a)};

        // inverse round trip on unit-body elements
        ExactElement u = random_element(rng, 4, 4, /*unit_body=*/true);
        ExactElement inv = inverse(u);
        if (multiply(u, inv) != ExactElement::one() || multiply(inv, u) != ExactElement::one())
            return Failure{"inverse-round-trip", "z=" + show(u)};

        // decomposition at the last slot, commutation twist, A = 0 cube law
        const std::uint32_t d = 4;
        ExactElement zz = random_element(rng, static_cast<int>(d), 5);
        auto dec = decompose_last(zz, d);
        ExactElement ed = e(d);
        ExactElement rebuilt =
            add(dec.a, add(multiply(dec.b, ed), multiply(dec.c, multiply(ed, ed))));
        if (rebuilt != zz) return Failure{"last-slot-decomposition", "z=" + show(zz)};
        if (multiply(dec.a, ed) != multiply(ed, grade_twist(dec.a)))
            return Failure{"commutation-twist", "A=" + show(dec.a)};
        ExactElement no_a = sub(zz, dec.a);
        if (!multiply(multiply(no_a, no_a), no_a).is_zero())
            return Failure{"soulful-cube", "z=" + show(no_a)};

        // projector: z * I_n agrees with P_n(z) * I_n
        int n = std::uniform_int_distribution<int>(1, static_cast<int>(d))(rng);
        ExactElement in = projector_monomial(n, static_cast<int>(d));
        if (multiply(zz, in) != multiply(project_Pn(zz, n, static_cast<int>(d)), in))
            return Failure{"projector-identity", "n=" + std::to_string(n) + " z=" + show(zz)};
    }
    return std::nullopt;
}

}  // namespace ternary::laws
