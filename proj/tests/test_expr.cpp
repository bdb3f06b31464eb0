#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ternary/algebra.hpp"
#include "ternary/expr.hpp"
#include "ternary/laws.hpp"
#include "ternary/serialize.hpp"
#include "ternary/weights.hpp"

using namespace ternary;

TEST_CASE("evaluation follows the algebra") {
    CHECK(to_text(eval_exact("e[2]*e[1]")) == "(w^2)*e[1]*e[2]");
    CHECK(to_text(eval_exact("inv(1 + e[1])")) == "1 + (-1)*e[1] + e[1]^2");
    CHECK(to_text(eval_exact("grade(0, conj(e[1])*e[1])")) == "0");
    CHECK(to_text(eval_exact("e[1]*e[1]")) == "e[1]^2");
    CHECK(to_text(eval_exact("e[1]^3")) == "0");
    CHECK(to_text(eval_exact("w^3")) == "1");
    CHECK(to_text(eval_exact("i*i")) == "(-1)");
    CHECK(to_text(eval_exact("1 - 1")) == "0");
    CHECK(eval_exact("conj(e[1])") == ExactElement::generator(1, 2));
    CHECK(eval_exact("2*e[1] + 3*e[1]") == scale(ExactComplex(5), ExactElement::generator(1)));
    CHECK(eval_exact("(1+e[1])*(1-e[1]+e[1]^2)") == ExactElement::one());
}

TEST_CASE("numbers: integers, rationals, decimals, scientific") {
    CHECK(eval_exact("3/4") == ExactElement::scalar(ExactComplex::from_rational(make_rational(3, 4))));
    CHECK(eval_exact("0.5") == ExactElement::scalar(ExactComplex::from_rational(make_rational(1, 2))));
    CHECK(eval_exact("2.5e-1") == ExactElement::scalar(ExactComplex::from_rational(make_rational(1, 4))));
    CHECK(eval_exact("12e2") == ExactElement::scalar(ExactComplex(1200)));
    // 'e' followed by '[' is a generator, not an exponent
    CHECK(eval_exact("2*e[3]") == scale(ExactComplex(2), ExactElement::generator(3)));
    Element f = eval_float("0.5*e[1] + 1/4");
    CHECK(std::abs(f.coefficient(MultiIndex::unit(1)) - 0.5) < 1e-15);
    CHECK(std::abs(f.body() - 0.25) < 1e-15);
}

TEST_CASE("parse errors carry positions") {
    auto pos_of = [](const char* text) {
        try {
            eval_exact(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    CHECK(pos_of("e[") >= 1);
    CHECK(pos_of("1 + ") >= 3);
    CHECK(pos_of("foo(2)") == 0);
    CHECK(pos_of("1 + 2)") == 5);
    CHECK(pos_of("e[0]") >= 0);
    CHECK(pos_of("grade(1 e[1])") >= 0);
    CHECK_THROWS_AS(eval_exact("inv(e[1])"), NotInvertibleError);
}

TEST_CASE("canonical text round trips") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        ExactElement z = laws::random_element(rng, 5, 6);
        CHECK(parse_exact_element(to_text(z)) == z);
    }
    // idempotent rendering
    ExactElement z = laws::random_element(rng, 4, 5);
    CHECK(to_text(parse_exact_element(to_text(z))) == to_text(z));
}

TEST_CASE("float text round trips") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    for (int t = 0; t < 100; ++t) {
        Element z;
        for (int k = 0; k < 4; ++k)
            z.accumulate(MultiIndex::unit(static_cast<std::uint32_t>(k + 1)),
                         {coeff(rng), coeff(rng)});
        z.accumulate(MultiIndex(), {coeff(rng), 0.0});
        Element back = parse_float_element(to_text(z));
        CHECK(p_norm(sub(back, z), 1.0) == 0.0);  // %.17g round-trips doubles
    }
}

TEST_CASE("structured record round trips") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        ExactElement z = laws::random_element(rng, 4, 5);
        std::string json = to_json_text(z);
        Element back = parse_float_element(json);
        // exact -> double -> element: coefficients match the double view
        for (const auto& [idx, c] : z.terms()) {
            auto v = back.coefficient(idx);
            CHECK(std::abs(v - c.to_complex()) < 1e-15);
        }
        CHECK(back.term_count() == z.term_count());
    }
    CHECK(parse_float_element("{\"terms\":[]}").is_zero());
    CHECK_THROWS_AS(parse_float_element("{\"bad\":1}"), ParseError);
    CHECK_THROWS_AS(parse_float_element("{nope"), ParseError);
    // exact parse of a JSON record keeps the double values exactly
    ExactElement via_exact = parse_exact_element("{\"terms\":[{\"coeff\":[0.5,-0.25],\"index\":[[2,1]]}]}");
    ExactComplex expect{{make_rational(1, 2), make_rational(-1, 4)}, GaussianRational(0)};
    CHECK(via_exact.coefficient(MultiIndex::unit(2)) == expect);
}

TEST_CASE("coefficient rendering covers the field") {
    CHECK(to_text(scale(ExactComplex::i(), ExactElement::generator(2))) == "(i)*e[2]");
    CHECK(to_text(ExactElement::scalar(-ExactComplex::one())) == "(-1)");
    CHECK(to_text(scale(ExactComplex::omega(), ExactElement::generator(1))) == "w*e[1]");
    ExactComplex mixed{{make_rational(1, 2), make_rational(-1, 3)},
                       {make_rational(2), make_rational(1)}};
    ExactElement z = ExactElement::scalar(mixed);
    CHECK(parse_exact_element(to_text(z)) == z);
    CHECK(to_text(z) == "(1/2-1/3*i+2*w+i*w)");
}
