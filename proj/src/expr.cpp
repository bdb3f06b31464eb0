#include "ternary/expr.hpp"

#include <cctype>
#include <string>

#include "ternary/algebra.hpp"
#include "ternary/errors.hpp"
#include "ternary/serialize.hpp"

namespace ternary {

namespace {

enum class Tok { Number, Ident, LBracket, RBracket, LParen, RParen, Caret, Plus, Minus, Star, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            current_ = {Tok::End, "", start};
            return;
        }
        char c = src_[i_];
        auto single = [&](Tok k) {
            ++i_;
            current_ = {k, std::string(1, c), start};
        };
        switch (c) {
            case '[': return single(Tok::LBracket);
            case ']': return single(Tok::RBracket);
            case '(': return single(Tok::LParen);
            case ')': return single(Tok::RParen);
            case '^': return single(Tok::Caret);
            case '+': return single(Tok::Plus);
            case '-': return single(Tok::Minus);
            case '*': return single(Tok::Star);
            case ',': return single(Tok::Comma);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t j = i_;
            bool seen_dot = false;
            while (j < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[j])) ||
                    (src_[j] == '.' && !seen_dot))) {
                if (src_[j] == '.') seen_dot = true;
                ++j;
            }
            // scientific exponent only when followed by digits (not 'e[')
            if (j < src_.size() && (src_[j] == 'e' || src_[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
                if (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) {
                    ++k;
                    while (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) ++k;
                    j = k;
                }
            }
            // rational p/q
            if (!seen_dot && j < src_.size() && src_[j] == '/') {
                std::size_t k = j + 1;
                if (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) {
                    while (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) ++k;
                    j = k;
                }
            }
            current_ = {Tok::Number, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isalpha(static_cast<unsigned char>(src_[j]))) ++j;
            current_ = {Tok::Ident, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token current_{Tok::End, "", 0};
};

template <class C>
C number_from_token(const Token& t);

template <>
ExactComplex number_from_token<ExactComplex>(const Token& t) {
    const std::string& s = t.text;
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational q(s);  // GMP parses "p/q" directly
        q.canonicalize();
        return ExactComplex::from_rational(q);
    }
    auto epos = s.find_first_of("eE");
    std::string mantissa = epos == std::string::npos ? s : s.substr(0, epos);
    long exp10 = epos == std::string::npos ? 0 : std::stol(s.substr(epos + 1));
    auto dot = mantissa.find('.');
    std::string digits = mantissa;
    if (dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exp10 -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty()) throw ParseError(t.pos, "malformed number");
    Rational q(digits);
    Rational ten(10);
    for (long k = 0; k < exp10; ++k) q *= ten;
    for (long k = 0; k > exp10; --k) q /= ten;
    q.canonicalize();
    return ExactComplex::from_rational(q);
}

template <>
std::complex<double> number_from_token<std::complex<double>>(const Token& t) {
    const std::string& s = t.text;
    auto slash = s.find('/');
    if (slash != std::string::npos)
        return {std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1)), 0.0};
    return {std::stod(s), 0.0};
}

template <class C>
C imaginary_unit();
template <>
ExactComplex imaginary_unit<ExactComplex>() { return ExactComplex::i(); }
template <>
std::complex<double> imaginary_unit<std::complex<double>>() { return {0.0, 1.0}; }

template <class C>
class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    BasicElement<C> parse() {
        BasicElement<C> z = parse_expr();
        if (lex_.peek().kind != Tok::End)
            throw ParseError(lex_.peek().pos, "unexpected trailing input");
        return z;
    }

private:
    using E = BasicElement<C>;

    E parse_expr() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Plus) lex_.take();
        else if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        E acc = parse_term();
        if (negate) acc = neg(acc);
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            E t = parse_term();
            acc = minus ? sub(acc, t) : add(acc, t);
        }
        return acc;
    }

    E parse_term() {
        E acc = parse_factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc = mul(acc, parse_factor());
        }
        return acc;
    }

    E parse_factor() {
        E base = parse_primary();
        if (lex_.peek().kind == Tok::Caret) {
            Token caret = lex_.take();
            long n = expect_uint("exponent");
            if (n > 64) throw ParseError(caret.pos, "exponent too large");
            E acc = E::one();
            for (long k = 0; k < n; ++k) acc = mul(acc, base);
            return acc;
        }
        return base;
    }

    E parse_primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Number:
                return E::scalar(number_from_token<C>(t));
            case Tok::LParen: {
                E inner = parse_expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Ident:
                if (t.text == "i") return E::scalar(imaginary_unit<C>());
                if (t.text == "w")
                    return E::scalar(CoeffTraits<C>::times_omega_pow(CoeffTraits<C>::one(), 1));
                if (t.text == "e") {
                    expect(Tok::LBracket, "'['");
                    long pos = expect_uint("generator position");
                    if (pos < 1) throw ParseError(t.pos, "generator positions are 1-based");
                    expect(Tok::RBracket, "']'");
                    return E::generator(static_cast<std::uint32_t>(pos));
                }
                if (t.text == "inv") {
                    expect(Tok::LParen, "'('");
                    E inner = parse_expr();
                    expect(Tok::RParen, "')'");
                    return inverse(inner);
                }
                if (t.text == "conj") {
                    expect(Tok::LParen, "'('");
                    E inner = parse_expr();
                    expect(Tok::RParen, "')'");
                    return conj(inner);
                }
                if (t.text == "grade") {
                    expect(Tok::LParen, "'('");
                    long k = expect_uint("grade index");
                    expect(Tok::Comma, "','");
                    E inner = parse_expr();
                    expect(Tok::RParen, "')'");
                    return grade_project(inner, static_cast<int>(k));
                }
                throw ParseError(t.pos, "unknown identifier '" + t.text + "'");
            default:
                throw ParseError(t.pos, "expected a value");
        }
    }

    void expect(Tok kind, const char* what) {
        Token t = lex_.take();
        if (t.kind != kind) throw ParseError(t.pos, std::string("expected ") + what);
    }

    long expect_uint(const char* what) {
        Token t = lex_.take();
        if (t.kind != Tok::Number || t.text.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(t.pos, std::string("expected unsigned integer ") + what);
        return std::stol(t.text);
    }

    Lexer lex_;
};

bool looks_like_json(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

}  // namespace

ExactElement eval_exact(std::string_view text) { return Parser<ExactComplex>(text).parse(); }
Element eval_float(std::string_view text) {
    return Parser<std::complex<double>>(text).parse();
}

ExactElement parse_exact_element(std::string_view text) {
    if (looks_like_json(text)) return exact_element_from_json(text);
    return eval_exact(text);
}

Element parse_float_element(std::string_view text) {
    if (looks_like_json(text)) return float_element_from_json(text);
    return eval_float(text);
}

}  // namespace ternary
