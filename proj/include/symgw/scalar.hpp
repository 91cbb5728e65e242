#pragma once

// EqScalar: an exact rational function num/den in t1, t2.
//
// Canonical form: gcd(num, den) = 1 and den monic under graded-lex, so
// structural equality decides mathematical equality. Equivariant weights,
// localization sums and pairings all live here.

#include "symgw/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace symgw {

class EqScalar {
public:
    EqScalar() : num_(), den_(Poly(1)) {}
    EqScalar(const Rational& c) : num_(Poly(c)), den_(Poly(1)) {}
    EqScalar(long c) : num_(Poly(c)), den_(Poly(1)) {}
    explicit EqScalar(Poly p) : num_(std::move(p)), den_(Poly(1)) {}
    EqScalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static EqScalar t1() { return EqScalar(Poly::t1()); }
    static EqScalar t2() { return EqScalar(Poly::t2()); }
    static EqScalar t_sum() { return EqScalar(Poly::t_sum()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly(1); }
    bool is_constant() const { return is_polynomial() && num_.is_constant(); }

    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("scalar is not constant: " + to_string());
        return num_.is_zero() ? Rational(0) : num_.constant_value();
    }
    const Poly& polynomial() const {
        if (!is_polynomial()) throw std::domain_error("scalar is not polynomial: " + to_string());
        return num_;
    }

    friend EqScalar operator+(const EqScalar& x, const EqScalar& y) {
        if (x.is_polynomial() && y.is_polynomial()) return EqScalar(x.num_ + y.num_);
        return EqScalar(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend EqScalar operator-(const EqScalar& x, const EqScalar& y) {
        if (x.is_polynomial() && y.is_polynomial()) return EqScalar(x.num_ - y.num_);
        return EqScalar(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend EqScalar operator*(const EqScalar& x, const EqScalar& y) {
        if (x.is_polynomial() && y.is_polynomial()) return EqScalar(x.num_ * y.num_);
        return EqScalar(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend EqScalar operator/(const EqScalar& x, const EqScalar& y) {
        if (y.is_zero()) throw std::domain_error("division by zero scalar");
        return EqScalar(x.num_ * y.den_, x.den_ * y.num_);
    }
    EqScalar operator-() const {
        EqScalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    EqScalar& operator+=(const EqScalar& o) { return *this = *this + o; }
    EqScalar& operator-=(const EqScalar& o) { return *this = *this - o; }
    EqScalar& operator*=(const EqScalar& o) { return *this = *this * o; }
    EqScalar& operator/=(const EqScalar& o) { return *this = *this / o; }

    friend bool operator==(const EqScalar&, const EqScalar&) = default;
    friend bool operator<(const EqScalar& x, const EqScalar& y) {
        if (x.num_ < y.num_) return true;
        if (y.num_ < x.num_) return false;
        return x.den_ < y.den_;
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        if (!num_.is_constant() && !den_.is_constant()) {
            Poly g = poly_gcd(num_, den_);
            if (!(g == Poly(1))) {
                num_ = divide_exact(num_, g);
                den_ = divide_exact(den_, g);
            }
        }
        Rational lc = den_.leading_coefficient();
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            num_ *= inv;
            den_ *= inv;
        }
    }

    Poly num_;
    Poly den_;
};

// --- text form --------------------------------------------------------------
//
// Grammar (the exact shape the CLI emits):
//   scalar := "(" poly ")/(" poly ")" | poly
//   poly   := [-] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := rational | "t1" ["^" int] | "t2" ["^" int]

namespace detail {

inline Poly parse_poly_text(const std::string& s) {
    Poly out;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i >= s.size()) throw std::invalid_argument("empty polynomial literal");
    int sign = 1;
    if (s[i] == '-') { sign = -1; ++i; }
    else if (s[i] == '+') ++i;
    while (true) {
        skip_ws();
        Rational coeff(1);
        int e1 = 0, e2 = 0;
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (i < s.size() && (s[i] == 't') && i + 1 < s.size() && (s[i + 1] == '1' || s[i + 1] == '2')) {
                bool is_t1 = s[i + 1] == '1';
                i += 2;
                int e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    size_t start = i;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                    if (start == i) throw std::invalid_argument("missing exponent in: " + s);
                    e = std::stoi(s.substr(start, i - start));
                }
                (is_t1 ? e1 : e2) += e;
            } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                size_t start = i;
                while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
                coeff *= parse_rational(s.substr(start, i - start));
            } else {
                throw std::invalid_argument("bad polynomial term in: " + s);
            }
            saw_factor = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') { ++i; continue; }
            break;
        }
        if (!saw_factor) throw std::invalid_argument("bad polynomial term in: " + s);
        out.add_term({e1, e2}, sign * coeff);
        skip_ws();
        if (i >= s.size()) break;
        if (s[i] == '+') sign = 1;
        else if (s[i] == '-') sign = -1;
        else throw std::invalid_argument("unexpected character in polynomial: " + s);
        ++i;
    }
    return out;
}

}  // namespace detail

inline EqScalar parse_eq_scalar(const std::string& s) {
    // quotient form "(num)/(den)"
    if (!s.empty() && s.front() == '(') {
        int depth = 0;
        size_t close = std::string::npos;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            else if (s[i] == ')' && --depth == 0) { close = i; break; }
        }
        if (close != std::string::npos && close + 2 < s.size() && s[close + 1] == '/' &&
            s[close + 2] == '(' && s.back() == ')') {
            Poly num = detail::parse_poly_text(s.substr(1, close - 1));
            Poly den = detail::parse_poly_text(s.substr(close + 3, s.size() - close - 4));
            return EqScalar(num, den);
        }
    }
    return EqScalar(detail::parse_poly_text(s));
}

}  // namespace symgw
