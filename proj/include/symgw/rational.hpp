#pragma once

// Exact rational arithmetic. All coefficient arithmetic in this library is
// an mpq_class; nothing here is ever rounded.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace symgw {

using Integer  = mpz_class;
using Rational = mpq_class;

inline Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// b^e for integer e of either sign; b != 0 when e < 0.
inline Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    Rational b = base;
    bool invert = exp < 0;
    if (invert) {
        if (b == 0) throw std::domain_error("zero raised to negative power");
        exp = -exp;
    }
    Rational acc(1);
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    if (invert) acc = Rational(1) / acc;
    return acc;
}

inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

// Accepts "p" or "p/q" with optional sign.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

}  // namespace symgw
