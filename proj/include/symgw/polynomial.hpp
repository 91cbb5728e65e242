#pragma once

// Sparse polynomials in the two torus weights t1, t2 over Q.
//
// Terms are kept in a map under graded-lex order (total degree first, then
// t1-degree), so the leading term is rbegin(). Everything downstream relies
// on exact gcd-based normalization of rational functions, so this header
// also provides exact division and a primitive-PRS gcd.

#include "symgw/rational.hpp"

#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symgw {

struct Monomial {
    int a = 0;  // exponent of t1
    int b = 0;  // exponent of t2

    int degree() const { return a + b; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // graded-lex with t1 > t2
    friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
        if (auto c = x.degree() <=> y.degree(); c != 0) return c;
        return x.a <=> y.a;
    }
};

class Poly {
public:
    Poly() = default;

    explicit Poly(const Rational& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    explicit Poly(long c) : Poly(Rational(c)) {}

    static Poly monomial(const Rational& c, int a, int b) {
        Poly p;
        if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
        if (c != 0) p.terms_[{a, b}] = c;
        return p;
    }
    static Poly t1() { return monomial(1, 1, 0); }
    static Poly t2() { return monomial(1, 0, 1); }
    // t1 + t2, the anti-diagonal weight every nonzero invariant factors through
    static Poly t_sum() {
        Poly p;
        p.terms_[{1, 0}] = 1;
        p.terms_[{0, 1}] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
    }
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("polynomial is not constant");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    int total_degree() const {
        return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
    }
    int degree_t1() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.a);
        return d;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Monomial leading_monomial() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.rbegin()->first;
    }
    Rational leading_coefficient() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.rbegin()->second;
    }

    Rational coefficient(int a, int b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }

    Poly operator-() const {
        Poly p;
        for (auto& [m, c] : terms_) p.terms_[m] = -c;
        return p;
    }

    friend Poly operator*(const Poly& x, const Poly& y) {
        Poly p;
        for (auto& [mx, cx] : x.terms_)
            for (auto& [my, cy] : y.terms_)
                p.add_term({mx.a + my.a, mx.b + my.b}, cx * cy);
        return p;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
    friend Poly operator*(const Rational& c, Poly p) { return p *= c; }

    friend bool operator==(const Poly&, const Poly&) = default;
    friend bool operator<(const Poly& x, const Poly& y) { return x.terms_ < y.terms_; }

    // p(t1, -t1) as a univariate polynomial in t1; zero iff (t1+t2) | p.
    bool vanishes_on_antidiagonal() const {
        std::map<int, Rational> u;
        for (auto& [m, c] : terms_) {
            Rational v = (m.b % 2 == 0) ? c : -c;
            u[m.a + m.b] += v;
        }
        for (auto& [d, c] : u)
            if (c != 0) return false;
        return true;
    }

    // Serialization used by the CLI JSON schema: terms like c*t1^i*t2^j
    // joined by +/-, leading coefficient 1 elided, descending graded-lex.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational abs = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? "-" : "+");
            }
            bool has_vars = m.a > 0 || m.b > 0;
            if (!has_vars || abs != 1) {
                out << abs.get_str();
                if (has_vars) out << "*";
            }
            if (m.a > 0) {
                out << "t1";
                if (m.a > 1) out << "^" << m.a;
                if (m.b > 0) out << "*";
            }
            if (m.b > 0) {
                out << "t2";
                if (m.b > 1) out << "^" << m.b;
            }
        }
        return out.str();
    }

private:
    std::map<Monomial, Rational> terms_;
};

namespace detail {

// View of p as a univariate polynomial in t1 with coefficients in Q[t2].
inline std::map<int, Poly> t1_coefficients(const Poly& p) {
    std::map<int, Poly> out;
    for (auto& [m, c] : p.terms()) out[m.a].add_term({0, m.b}, c);
    return out;
}

inline Poly from_t1_coefficients(const std::map<int, Poly>& coeffs) {
    Poly p;
    for (auto& [a, q] : coeffs)
        for (auto& [m, c] : q.terms()) p.add_term({a, m.b}, c);
    return p;
}

// Euclidean gcd for polynomials in t2 alone, normalized monic.
inline Poly gcd_univariate_t2(Poly x, Poly y) {
    auto deg = [](const Poly& p) { return p.total_degree(); };
    auto lc = [](const Poly& p) { return p.leading_coefficient(); };
    while (!y.is_zero()) {
        // remainder of x by y
        while (!x.is_zero() && deg(x) >= deg(y)) {
            Rational q = lc(x) / lc(y);
            int shift = deg(x) - deg(y);
            x -= y * Poly::monomial(q, 0, shift);
        }
        std::swap(x, y);
    }
    if (x.is_zero()) return x;
    x *= Rational(1) / lc(x);
    return x;
}

// Exact division for polynomials in t2 alone.
inline Poly divide_exact_univariate_t2(Poly num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly quot;
    while (!num.is_zero()) {
        int dn = num.total_degree(), dd = den.total_degree();
        if (dn < dd) throw std::domain_error("inexact polynomial division");
        Rational q = num.leading_coefficient() / den.leading_coefficient();
        Poly term = Poly::monomial(q, 0, dn - dd);
        quot += term;
        num -= den * term;
    }
    return quot;
}

}  // namespace detail

// Exact division num/den in Q[t1,t2]; throws if den does not divide num.
// Runs as univariate division in t1 whose coefficient divisions recurse
// into t2; every step of an exact division stays exact.
inline Poly divide_exact(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return Poly();
    if (den.is_constant()) return num * (Rational(1) / den.constant_value());

    auto nc = detail::t1_coefficients(num);
    auto dc = detail::t1_coefficients(den);
    int dd = dc.rbegin()->first;
    const Poly& dlead = dc.rbegin()->second;

    std::map<int, Poly> quot;
    while (!nc.empty()) {
        int dn = nc.rbegin()->first;
        if (dn < dd) throw std::domain_error("inexact polynomial division");
        Poly q = detail::divide_exact_univariate_t2(nc.rbegin()->second, dlead);
        quot[dn - dd] = q;
        // num -= q * t1^(dn-dd) * den
        for (auto& [a, c] : dc) {
            auto it = nc.find(a + dn - dd);
            Poly updated = (it == nc.end() ? Poly() : it->second) - q * c;
            if (updated.is_zero()) {
                if (it != nc.end()) nc.erase(it);
            } else {
                nc[a + dn - dd] = updated;
            }
        }
    }
    return detail::from_t1_coefficients(quot);
}

// Monic gcd in Q[t1,t2] via content/primitive-part recursion on t1 and a
// pseudo-remainder sequence. Inputs here are tiny (products of linear
// weights), so no subresultant bookkeeping is needed.
inline Poly poly_gcd(Poly x, Poly y) {
    if (x.is_zero() && y.is_zero()) return Poly();
    auto monic = [](Poly p) {
        if (!p.is_zero()) p *= Rational(1) / p.leading_coefficient();
        return p;
    };
    if (x.is_zero()) return monic(y);
    if (y.is_zero()) return monic(x);
    if (x.is_constant() || y.is_constant()) return Poly(1);
    if (x.degree_t1() == 0 && y.degree_t1() == 0) return detail::gcd_univariate_t2(x, y);

    auto content = [](const Poly& p) {
        Poly c;
        for (auto& [a, q] : detail::t1_coefficients(p)) c = detail::gcd_univariate_t2(c, q);
        return c;
    };
    Poly cx = content(x), cy = content(y);
    Poly cg = detail::gcd_univariate_t2(cx, cy);
    Poly px = divide_exact(x, cx), py = divide_exact(y, cy);

    if (px.degree_t1() < py.degree_t1()) std::swap(px, py);
    while (!py.is_zero()) {
        // pseudo-remainder of px by py in (Q[t2])[t1]
        auto b = detail::t1_coefficients(py);
        int db = b.rbegin()->first;
        Poly blc = b.rbegin()->second;
        Poly r = px;
        while (!r.is_zero() && r.degree_t1() >= db) {
            auto rc = detail::t1_coefficients(r);
            int dr = rc.rbegin()->first;
            Poly rlc = rc.rbegin()->second;
            Poly shift = Poly::monomial(1, dr - db, 0);
            r = r * blc - py * (shift * rlc);
        }
        px = py;
        py = r.is_zero() ? Poly() : divide_exact(r, content(r));
    }
    Poly g = divide_exact(px, content(px)) * cg;
    return monic(g);
}

struct TSumSplit {
    bool zero_input = false;  // p == 0: infinite multiplicity sentinel
    int multiplicity = 0;
    Poly cofactor;  // p == (t1+t2)^multiplicity * cofactor
};

inline TSumSplit split_off_t_sum(Poly p) {
    TSumSplit s;
    if (p.is_zero()) {
        s.zero_input = true;
        return s;
    }
    const Poly ts = Poly::t_sum();
    while (p.vanishes_on_antidiagonal()) {
        p = divide_exact(p, ts);
        ++s.multiplicity;
    }
    s.cofactor = std::move(p);
    return s;
}

}  // namespace symgw
