#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace tanglekit {

/// Dense univariate polynomial in n with big-integer coefficients,
/// ascending order.
struct Polynomial {
    std::vector<Int> c;

    Polynomial() = default;
    explicit Polynomial(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
    static Polynomial constant(Int v) { return Polynomial({std::move(v)}); }
    static Polynomial variable() { return Polynomial({0, 1}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    const Int& lead() const {
        static const Int z = 0;
        return c.empty() ? z : c.back();
    }
    Int coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c.size()) ? c[static_cast<size_t>(i)] : Int(0);
    }

    Int operator()(const Int& n) const {
        Int r = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * n + *it;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Int> r(std::max(a.c.size(), b.c.size()), 0);
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Int> r(std::max(a.c.size(), b.c.size()), 0);
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.zero() || b.zero()) return {};
        std::vector<Int> r(a.c.size() + b.c.size() - 1, 0);
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return Polynomial(std::move(r));
    }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }

    bool operator==(const Polynomial&) const = default;
};

namespace detail {

/// Recursive-descent parser for integer polynomial expressions in n:
/// +, -, *, ^, parentheses, integer literals and the variable `n`.
class PolyParser {
public:
    explicit PolyParser(const std::string& text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }

    Polynomial parse() {
        Polynomial p = expr();
        if (pos_ != src_.size())
            fail(errc::usage, "trailing input in polynomial at '" + src_.substr(pos_) + "'");
        return p;
    }

private:
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    Polynomial expr() {
        Polynomial p = eat('-') ? -term() : (eat('+'), term());
        for (;;) {
            if (eat('+')) p = p + term();
            else if (eat('-')) p = p - term();
            else return p;
        }
    }
    Polynomial term() {
        Polynomial p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }
    Polynomial factor() {
        Polynomial p = atom();
        if (eat('^')) {
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail(errc::usage, "exponent must be a nonnegative integer");
            long e = std::stol(number());
            Polynomial r = Polynomial::constant(1);
            for (long i = 0; i < e; ++i) r = r * p;
            return r;
        }
        return p;
    }
    Polynomial atom() {
        if (eat('(')) {
            Polynomial p = expr();
            if (!eat(')')) fail(errc::usage, "expected ')'");
            return p;
        }
        if (eat('-')) return -atom();
        if (peek() == 'n') {
            ++pos_;
            return Polynomial::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(peek())))
            return Polynomial::constant(Int(number()));
        fail(errc::usage, "unexpected character in polynomial");
    }
    std::string number() {
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return src_.substr(start, pos_ - start);
    }

    std::string src_;
    size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(const std::string& text) {
    return detail::PolyParser(text).parse();
}

} // namespace tanglekit
