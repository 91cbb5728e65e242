#include "symgw/scalar.hpp"
#include "symgw/series.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace symgw;

namespace {

// deterministic little generator for property tests
struct Lcg {
    unsigned long state;
    explicit Lcg(unsigned long seed) : state(seed) {}
    int next(int mod) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((state >> 33) % static_cast<unsigned long>(mod));
    }
};

Poly random_poly(Lcg& rng) {
    Poly p;
    int terms = 1 + rng.next(3);
    for (int t = 0; t < terms; ++t) {
        Rational c(rng.next(9) - 4);
        if (c == 0) c = 1;
        p.add_term({rng.next(3), rng.next(3)}, c);
    }
    return p;
}

EqScalar random_scalar(Lcg& rng) {
    Poly num = random_poly(rng);
    Poly den = random_poly(rng);
    if (den.is_zero()) den = Poly(1);
    return EqScalar(num, den);
}

}  // namespace

TEST_CASE("polynomial ring identities") {
    Poly t1 = Poly::t1(), t2 = Poly::t2();
    CHECK((t1 + t2) * (t1 - t2) == t1 * t1 - t2 * t2);
    CHECK(Poly::t_sum() == t1 + t2);
    CHECK((t1 * t2).to_string() == "t1*t2");
    CHECK((Poly(2) * t1 + Poly(2) * t2).to_string() == "2*t1+2*t2");
}

TEST_CASE("scalar field axioms on random rational functions") {
    Lcg rng(42);
    for (int i = 0; i < 60; ++i) {
        EqScalar a = random_scalar(rng);
        EqScalar b = random_scalar(rng);
        EqScalar c = random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a / a == EqScalar(Rational(1)));
    }
}

TEST_CASE("scalar normalization is canonical") {
    // same value, different presentations
    EqScalar x(Poly::t_sum() * Poly::t_sum(), Poly::t_sum());
    CHECK(x == EqScalar(Poly::t_sum()));
    CHECK(x.is_polynomial());

    EqScalar y(Poly::t1() * Poly(2), Poly::t2() * Poly(4));
    CHECK(y.den().leading_coefficient() == 1);
    CHECK(y == EqScalar(Poly::t1(), Poly::t2() * Poly(2)));
}

TEST_CASE("division by zero scalar") {
    CHECK_THROWS_AS(EqScalar(Rational(1)) / EqScalar(), std::domain_error);
}

TEST_CASE("split_off_t_sum") {
    auto s = split_off_t_sum(Poly::t_sum() * Poly(4));
    CHECK(s.multiplicity == 1);
    CHECK(s.cofactor == Poly(4));

    auto s2 = split_off_t_sum(Poly::t1() * Poly::t1() - Poly::t2() * Poly::t2());
    CHECK(s2.multiplicity == 1);
    CHECK(s2.cofactor == Poly::t1() - Poly::t2());

    auto s3 = split_off_t_sum(Poly::t1() * Poly::t2());
    CHECK(s3.multiplicity == 0);
    CHECK(s3.cofactor == Poly::t1() * Poly::t2());

    auto s4 = split_off_t_sum(Poly());
    CHECK(s4.zero_input);
}

TEST_CASE("split reassembly is exact") {
    Lcg rng(7);
    for (int i = 0; i < 40; ++i) {
        Poly p = random_poly(rng);
        for (int k = 0; k < rng.next(3); ++k) p *= Poly::t_sum();
        if (p.is_zero()) continue;
        auto s = split_off_t_sum(p);
        Poly back = s.cofactor;
        for (int k = 0; k < s.multiplicity; ++k) back *= Poly::t_sum();
        CHECK(back == p);
        CHECK_FALSE(s.cofactor.vanishes_on_antidiagonal());
    }
}

TEST_CASE("truncated series arithmetic") {
    TruncatedSeries a({"t"}, {2});
    a.set_coefficient({0}, EqScalar(Rational(1)));
    a.set_coefficient({2}, EqScalar(Rational(1) / Rational(6)));
    TruncatedSeries b({"t"}, {2});
    b.set_coefficient({0}, EqScalar(Rational(1)));
    b.set_coefficient({2}, EqScalar(Rational(-1) / Rational(24)));

    TruncatedSeries prod = a * b;
    CHECK(prod.coefficient({0}) == EqScalar(Rational(1)));
    CHECK(prod.coefficient({2}) == EqScalar(Rational(1) / Rational(8)));
    CHECK(prod.coefficient({1}).is_zero());
}

TEST_CASE("coefficient queries beyond truncation are errors") {
    TruncatedSeries s({"t"}, {2});
    s.set_coefficient({2}, EqScalar(Rational(1) / Rational(8)));
    CHECK_THROWS_AS(s.coefficient({3}), truncation_error);
    CHECK_THROWS_AS(s.set_coefficient({5}, EqScalar(Rational(1))), truncation_error);
}

TEST_CASE("series inversion") {
    TruncatedSeries one = TruncatedSeries::constant({"t"}, {4}, EqScalar(Rational(1)));
    CHECK(one.inverse() == one);

    TruncatedSeries s({"t"}, {2});
    s.set_coefficient({0}, EqScalar(Rational(1)));
    s.set_coefficient({2}, EqScalar(Rational(1) / Rational(24)));
    TruncatedSeries inv = s.inverse();
    CHECK(inv.coefficient({2}) == EqScalar(Rational(-1) / Rational(24)));
    CHECK(s * inv == TruncatedSeries::constant({"t"}, {2}, EqScalar(Rational(1))));

    TruncatedSeries zero_const({"t"}, {2});
    zero_const.set_coefficient({1}, EqScalar(Rational(1)));
    CHECK_THROWS_AS(zero_const.inverse(), std::domain_error);
}

TEST_CASE("series inversion round trip on random unit series") {
    Lcg rng(99);
    for (int i = 0; i < 100; ++i) {
        TruncatedSeries s({"u", "s1"}, {2, 2});
        s.set_coefficient({0, 0}, EqScalar(Rational(1 + rng.next(4))));
        for (int e0 = 0; e0 <= 2; ++e0)
            for (int e1 = 0; e1 <= 2; ++e1) {
                if (e0 == 0 && e1 == 0) continue;
                int c = rng.next(7) - 3;
                if (c != 0) s.set_coefficient({e0, e1}, EqScalar(Rational(c)));
            }
        TruncatedSeries prod = s * s.inverse();
        CHECK(prod == TruncatedSeries::constant({"u", "s1"}, {2, 2}, EqScalar(Rational(1))));
    }
}

TEST_CASE("series variable-set mismatch is an error") {
    TruncatedSeries a({"t"}, {2});
    TruncatedSeries b({"u"}, {2});
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    TruncatedSeries c({"t"}, {3});
    CHECK_THROWS_AS(a * c, std::invalid_argument);
}

TEST_CASE("scalar text form round trip") {
    Lcg rng(1234);
    for (int i = 0; i < 60; ++i) {
        EqScalar x = random_scalar(rng);
        CHECK(parse_eq_scalar(x.to_string()) == x);
    }
    CHECK(parse_eq_scalar("2*t1+2*t2") == EqScalar(Poly::t_sum() * Poly(2)));
    CHECK(parse_eq_scalar("1/2") == EqScalar(Rational(1) / Rational(2)));
    CHECK(parse_eq_scalar("-t1^2*t2") == EqScalar(Poly::monomial(-1, 2, 1)));
    CHECK(parse_eq_scalar("(t1+t2)/(t1*t2)") ==
          EqScalar(Poly::t_sum(), Poly::t1() * Poly::t2()));
    CHECK(parse_eq_scalar("0").is_zero());
    CHECK_THROWS_AS(parse_eq_scalar("t3"), std::invalid_argument);
}

TEST_CASE("polynomial gcd") {
    Poly a = Poly::t_sum() * (Poly::t1() - Poly::t2());
    Poly b = Poly::t_sum() * Poly::t1();
    CHECK(poly_gcd(a, b) == Poly::t_sum());
    CHECK(poly_gcd(a, Poly()) == (a * (Rational(1) / a.leading_coefficient())));
    CHECK(poly_gcd(Poly(3), a) == Poly(1));

    Lcg rng(5);
    int planted = 0;
    for (int i = 0; i < 60; ++i) {
        Poly g = random_poly(rng) * random_poly(rng);
        Poly x = random_poly(rng) * random_poly(rng);
        Poly y = random_poly(rng);
        if (g.is_zero() || x.is_zero() || y.is_zero()) continue;
        ++planted;
        Poly gg = poly_gcd(g * x, g * y);
        // the gcd divides both inputs and contains the planted factor
        CHECK_NOTHROW(divide_exact(g * x, gg));
        CHECK_NOTHROW(divide_exact(g * y, gg));
        Poly monic_g = g * (Rational(1) / g.leading_coefficient());
        CHECK_NOTHROW(divide_exact(gg, monic_g));
        CHECK(gg.leading_coefficient() == 1);
    }
    CHECK(planted > 40);
}

TEST_CASE("exact division round trips") {
    Lcg rng(77);
    for (int i = 0; i < 60; ++i) {
        Poly d = random_poly(rng);
        Poly q = random_poly(rng);
        if (d.is_zero()) continue;
        CHECK(divide_exact(d * q, d) == q);
    }
    CHECK_THROWS_AS(divide_exact(Poly::t1(), Poly::t_sum()), std::domain_error);
    CHECK_THROWS_AS(divide_exact(Poly::t1(), Poly()), std::domain_error);
}
