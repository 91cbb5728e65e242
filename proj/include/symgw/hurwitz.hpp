#pragma once

// Double Hurwitz numbers H^g_{lambda,rho}.
//
// Counting convention: ordered tuples (alpha, tau_1, ..., tau_b, beta) with
// alpha in C_lambda, tau_i transpositions, beta in C_rho and product the
// identity, divided by n! and nothing else. b = 2g - 2 + l(lambda) + l(rho)
// is fixed by Riemann-Hurwitz. With this convention the one-part numbers
// match the Goulden-Jackson-Vakil closed form on every tested case.
//
// Two evaluation paths are provided and cross-checked by the acceptance
// suite: the GJV sinh-series formula (any n, rho = (n) only) and the class
// algebra convolution (any rho, n bounded).

#include "symgw/class_algebra.hpp"
#include "symgw/series.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace symgw {

struct HurwitzQuery {
    Partition lambda;
    Partition rho;
    int genus = 0;

    int branch_points() const {
        return 2 * genus - 2 + lambda.length() + rho.length();
    }
};

inline constexpr int kDefaultBruteForceBound = 7;

namespace detail {

// sinh(x t/2) / (x t/2) = sum_k (x/2)^{2k} t^{2k} / (2k+1)!  truncated
inline TruncatedSeries sinh_ratio(long x, int order) {
    TruncatedSeries s({"t"}, {order});
    Rational x2(x, 2);
    x2.canonicalize();
    Rational pow(1);
    for (int k = 0; 2 * k <= order; ++k) {
        Rational coeff = pow;
        coeff /= Rational(factorial(2 * k + 1));
        s.set_coefficient({2 * k}, EqScalar(coeff));
        pow *= x2 * x2;
    }
    return s;
}

}  // namespace detail

// H^g_{lambda,(n)} via GJV: the coefficient of t^{2g} in
//   (2g + l - 1)! n^{2g + l - 2} / |Aut(lambda)| *
//   (t/2)/sinh(t/2) * prod_i sinh(lambda_i t/2)/(lambda_i t/2).
inline Rational gjv_hurwitz(const Partition& lambda, int genus) {
    if (genus < 0) return Rational(0);
    int n = lambda.size();
    int ell = lambda.length();

    static std::mutex mu;
    static std::map<std::pair<Partition, int>, Rational> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({lambda, genus});
        if (it != cache.end()) return it->second;
    }

    int order = 2 * genus;
    TruncatedSeries integrand = detail::sinh_ratio(1, order).inverse();
    for (int p : lambda.parts()) integrand *= detail::sinh_ratio(p, order);

    Rational coeff = integrand.coefficient({2 * genus}).constant_value();
    Rational value = Rational(factorial(2 * genus + ell - 1)) * coeff;
    value *= pow_rational(Rational(n), 2 * genus + ell - 2);
    value /= Rational(aut_order(lambda));

    std::lock_guard<std::mutex> lock(mu);
    cache[{lambda, genus}] = value;
    return value;
}

inline Rational brute_force_hurwitz(const HurwitzQuery& q,
                                    int bound = kDefaultBruteForceBound) {
    int n = q.lambda.size();
    if (q.rho.size() != n)
        throw std::invalid_argument("brute_force_hurwitz: |lambda| != |rho|");
    if (n > bound)
        throw std::invalid_argument("brute_force_hurwitz: n exceeds configured bound");
    if (q.genus < 0) return Rational(0);
    int b = q.branch_points();
    if (b < 0) return Rational(0);

    const ClassAlgebra& alg = ClassAlgebra::get(n);
    std::vector<Integer> z = alg.transposition_walk(q.lambda, b);
    int rho_idx = alg.index_of(q.rho);
    Integer tuples = z[static_cast<size_t>(rho_idx)] * alg.class_size(rho_idx);
    Rational h(tuples, factorial(n));
    h.canonicalize();
    return h;
}

// H for a contracted component carrying a_k simple markings and ramification
// mu over the distinguished point: a_k = 2 g - 1 + l(mu) determines the
// genus; half-integral or negative genus contributes zero.
inline Rational hurwitz_for_marked_points(const Partition& mu, int a_k, int n) {
    if (mu.size() != n)
        throw std::invalid_argument("hurwitz_for_marked_points: |mu| != n");
    int numer = a_k + 1 - mu.length();
    if (numer < 0 || numer % 2 != 0) return Rational(0);
    return gjv_hurwitz(mu, numer / 2);
}

}  // namespace symgw
