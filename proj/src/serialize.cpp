#include "ternary/serialize.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

#include "ternary/errors.hpp"

namespace ternary {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_rational(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// One signed token per nonzero component of (a.re) + (a.im)i + (b.re)w + (b.im)iw.
void push_component(std::vector<std::string>& parts, const Rational& q, const char* unit) {
    if (q == 0) return;
    Rational mag = q < 0 ? Rational(-q) : q;
    std::string tok;
    if (mag == 1 && *unit != '\0')
        tok = unit;
    else {
        tok = format_rational(mag);
        if (*unit != '\0') tok += std::string("*") + unit;
    }
    if (parts.empty())
        parts.push_back(q < 0 ? "-" + tok : tok);
    else
        parts.push_back((q < 0 ? "-" : "+") + tok);
}

// Exact coefficient token. `bare` is set when the coefficient stands alone
// without enclosing parentheses (plain nonnegative rational).
std::string format_coeff(const ExactComplex& c, bool* bare) {
    *bare = false;
    if (c == ExactComplex::omega()) return "w";
    if (c == ExactComplex::omega().times_omega_pow(1)) return "(w^2)";
    std::vector<std::string> parts;
    push_component(parts, c.a.re, "");
    push_component(parts, c.a.im, "i");
    push_component(parts, c.b.re, "w");
    push_component(parts, c.b.im, "i*w");
    std::string body;
    for (const auto& p : parts) body += p;
    if (parts.size() == 1 && c.a.im == 0 && c.b.is_zero() && c.a.re > 0) {
        *bare = true;
        return body;
    }
    return "(" + body + ")";
}

std::string format_coeff(const std::complex<double>& c, bool* bare) {
    *bare = false;
    if (c.imag() == 0.0) {
        if (c.real() >= 0.0) {
            *bare = true;
            return format_double(c.real());
        }
        return "(-" + format_double(-c.real()) + ")";
    }
    std::string out = "(";
    bool have = false;
    if (c.real() != 0.0) {
        out += format_double(c.real());
        have = true;
    }
    double im = c.imag();
    if (have && im >= 0.0) out += "+";
    if (im < 0.0) {
        out += "-";
        im = -im;
    }
    out += format_double(im) + "*i";
    return out + ")";
}

template <class C>
bool is_unit_coeff(const C& c) {
    return c == CoeffTraits<C>::one();
}

template <class C>
std::string element_text(const BasicElement<C>& z) {
    if (z.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : z.terms()) {
        if (!first) out += " + ";
        first = false;
        std::ostringstream mono;
        if (!idx.empty()) mono << idx;
        if (idx.empty()) {
            bool bare = false;
            out += format_coeff(c, &bare);
        } else if (is_unit_coeff(c)) {
            out += mono.str();
        } else {
            bool bare = false;
            out += format_coeff(c, &bare) + "*" + mono.str();
        }
    }
    return out;
}

template <class C>
std::string element_json(const BasicElement<C>& z) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [idx, c] : z.terms()) {
        nlohmann::json index = nlohmann::json::array();
        for (const auto& [pos, exp] : idx.entries())
            index.push_back({pos, exp});
        std::complex<double> v = CoeffTraits<C>::to_complex(c);
        terms.push_back({{"coeff", {v.real(), v.imag()}}, {"index", index}});
    }
    return nlohmann::json{{"terms", terms}}.dump();
}

template <class C>
BasicElement<C> element_from_json_impl(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(static_cast<std::size_t>(e.byte), "invalid JSON element");
    }
    if (!doc.contains("terms") || !doc["terms"].is_array())
        throw ParseError(0, "JSON element must contain a \"terms\" array");
    BasicElement<C> z;
    for (const auto& term : doc["terms"]) {
        const auto& coeff = term.at("coeff");
        double re = coeff.at(0).get<double>();
        double im = coeff.at(1).get<double>();
        std::vector<MultiIndex::Entry> entries;
        for (const auto& pe : term.at("index"))
            entries.emplace_back(pe.at(0).get<std::uint32_t>(),
                                 static_cast<std::uint8_t>(pe.at(1).get<int>()));
        C value;
        if constexpr (CoeffTraits<C>::exact) {
            value = ExactComplex{{Rational(re), Rational(im)}, GaussianRational(0)};
        } else {
            value = std::complex<double>(re, im);
        }
        z.accumulate(MultiIndex::from_entries(std::move(entries)), value);
    }
    return z;
}

}  // namespace

std::string to_text(const ExactElement& z) { return element_text(z); }
std::string to_text(const Element& z) { return element_text(z); }
std::string to_json_text(const ExactElement& z) { return element_json(z); }
std::string to_json_text(const Element& z) { return element_json(z); }

ExactElement exact_element_from_json(std::string_view text) {
    return element_from_json_impl<ExactComplex>(text);
}
Element float_element_from_json(std::string_view text) {
    return element_from_json_impl<std::complex<double>>(text);
}

}  // namespace ternary
