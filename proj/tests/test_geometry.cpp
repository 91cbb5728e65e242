#include "symgw/ar_surface.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace symgw;

namespace {
Poly linear(long c1, long c2) {
    Poly p;
    p.add_term({1, 0}, Rational(c1));
    p.add_term({0, 1}, Rational(c2));
    return p;
}
}  // namespace

TEST_CASE("tangent weights") {
    const ArSurface& a1 = ArSurface::get(1);
    CHECK(a1.L(1) == linear(2, 0));
    CHECK(a1.R(1) == linear(-1, 1));

    const ArSurface& a2 = ArSurface::get(2);
    CHECK(a2.L(2) == linear(2, -1));
    CHECK(a2.R(2) == linear(-1, 2));

    for (int r = 1; r <= 10; ++r) {
        const ArSurface& s = ArSurface::get(r);
        for (int i = 1; i <= r + 1; ++i) CHECK(s.L(i) + s.R(i) == Poly::t_sum());
        for (int i = 1; i <= r; ++i) CHECK(s.R(i) == -s.L(i + 1));
    }
    CHECK_THROWS_AS(a1.L(3), std::out_of_range);
}

TEST_CASE("restriction table") {
    const ArSurface& a1 = ArSurface::get(1);
    DivisorClass e1 = a1.exceptional_class(1);
    CHECK(e1.at_fixed[0] == EqScalar(linear(2, 0)));   // L_1 = 2 t1
    CHECK(e1.at_fixed[1] == EqScalar(linear(0, 2)));   // R_2 = 2 t2

    const ArSurface& a2 = ArSurface::get(2);
    CHECK(a2.exceptional_class(1).at_fixed[2].is_zero());

    DivisorClass x2 = a1.fixed_point_class(2);
    CHECK(x2.at_fixed[1] == EqScalar(linear(1, -1) * linear(0, 2)));
    CHECK(x2.at_fixed[0].is_zero());

    for (int i = 0; i <= 1; ++i) CHECK(a1.one_class().at_fixed[i] == EqScalar(Rational(1)));
}

TEST_CASE("localization collapses to the intersection matrix") {
    for (int r = 1; r <= 5; ++r) {
        const ArSurface& s = ArSurface::get(r);
        for (int k = 1; k <= r; ++k)
            for (int l = 1; l <= r; ++l) {
                EqScalar v = s.equivariant_integral(s.exceptional_class(k),
                                                    s.exceptional_class(l));
                CHECK(v == EqScalar(Rational(ArSurface::intersection_entry(k, l))));
            }
        for (int i = 1; i <= r + 1; ++i) {
            DivisorClass x = s.fixed_point_class(i);
            CHECK(s.equivariant_integral(std::span<const DivisorClass>(&x, 1)) ==
                  EqScalar(Rational(1)));
        }
    }
}

TEST_CASE("omega duality") {
    const ArSurface& a1 = ArSurface::get(1);
    auto c1 = a1.omega_coordinates(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == Rational(-1) / Rational(2));

    const ArSurface& a2 = ArSurface::get(2);
    auto c = a2.omega_coordinates(1);
    CHECK(c[0] == Rational(-2) / Rational(3));
    CHECK(c[1] == Rational(-1) / Rational(3));

    for (int r = 1; r <= 4; ++r) {
        const ArSurface& s = ArSurface::get(r);
        for (int k = 1; k <= r; ++k)
            for (int i = 1; i <= r; ++i)
                CHECK(s.equivariant_integral(s.omega_class(k), s.exceptional_class(i)) ==
                      EqScalar(Rational(k == i ? 1 : 0)));
    }
}

TEST_CASE("chain decomposition") {
    CHECK_THROWS_AS(chain_decompose(CurveClass{{0, 0, 0}}), std::invalid_argument);

    auto d1 = chain_decompose(CurveClass{{0, 2, 2}});
    REQUIRE(d1.has_value());
    CHECK(d1->d == 2);
    CHECK(d1->i == 2);
    CHECK(d1->j == 3);

    CHECK_FALSE(chain_decompose(CurveClass{{1, 0, 1}}).has_value());
    CHECK_FALSE(chain_decompose(CurveClass{{2, 1, 0}}).has_value());

    auto d3 = chain_decompose(CurveClass{{1, 1, 1}});
    REQUIRE(d3.has_value());
    CHECK(d3->d == 1);
    CHECK(d3->i == 1);
    CHECK(d3->j == 3);

    // decompose exists iff support is an interval with constant coefficient
    for (int mask = 1; mask < 16; ++mask) {
        CurveClass beta;
        for (int k = 0; k < 4; ++k) beta.d.push_back((mask >> k) & 1 ? 2 : 0);
        int first = -1, last = -1;
        for (int k = 0; k < 4; ++k)
            if (beta.d[k]) {
                if (first < 0) first = k;
                last = k;
            }
        bool interval = true;
        for (int k = first; k <= last; ++k)
            if (!beta.d[k]) interval = false;
        CHECK(chain_decompose(beta).has_value() == interval);
    }
}

TEST_CASE("label to fixed-point basis") {
    const ArSurface& a1 = ArSurface::get(1);
    auto e1 = a1.label_to_fixed_basis(CohLabel::E(1));
    REQUIRE(e1.size() == 2);
    CHECK(e1[0].first == 1);
    CHECK(e1[0].second == EqScalar(Poly(1), linear(-1, 1)));  // 1/R_1
    CHECK(e1[1].first == 2);
    CHECK(e1[1].second == EqScalar(Poly(1), linear(1, -1)));  // 1/L_2

    auto one = a1.label_to_fixed_basis(CohLabel::one());
    REQUIRE(one.size() == 2);
    CHECK(one[0].second == EqScalar(Poly(1), linear(2, 0) * linear(-1, 1)));
    CHECK(one[1].second == EqScalar(Poly(1), linear(1, -1) * linear(0, 2)));

    // change of basis reproduces integrals: expand E_k and re-integrate
    for (int r = 1; r <= 3; ++r) {
        const ArSurface& s = ArSurface::get(r);
        for (int k = 1; k <= r; ++k)
            for (int l = 1; l <= r; ++l) {
                EqScalar acc;
                for (auto& [i, coeff] : s.label_to_fixed_basis(CohLabel::E(k)))
                    acc += coeff * s.equivariant_integral(s.fixed_point_class(i),
                                                          s.exceptional_class(l));
                CHECK(acc == EqScalar(Rational(ArSurface::intersection_entry(k, l))));
            }
    }
}

TEST_CASE("chain intersections") {
    const ArSurface& a3 = ArSurface::get(3);
    // endpoints meet the chain in -1, interior in 0, adjacent in 1
    CHECK(a3.chain_label_intersection(1, 2, CohLabel::E(1)) == -1);
    CHECK(a3.chain_label_intersection(1, 3, CohLabel::E(2)) == 0);
    CHECK(a3.chain_label_intersection(2, 3, CohLabel::E(1)) == 1);
    CHECK(a3.chain_label_intersection(1, 1, CohLabel::E(1)) == -2);
    CHECK(a3.chain_label_intersection(1, 2, CohLabel::one()) == 0);
    CHECK(a3.chain_label_intersection(2, 3, CohLabel::omega(2)) == 1);
    CHECK(a3.chain_label_intersection(2, 3, CohLabel::omega(1)) == 0);
}
