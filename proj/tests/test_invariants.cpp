#include "symgw/invariants.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace symgw;

namespace {

WeightedPartition wp(const std::string& text) { return WeightedPartition::parse(text); }

EqScalar t_sum_times(const Rational& c) { return EqScalar(Poly::t_sum() * c); }

}  // namespace

TEST_CASE("theorem evaluator spot values") {
    for (int d = 1; d <= 4; ++d) {
        InvariantQuery q{2, 1, wp("2(E1)"), wp("2(E1)"), 0, CurveClass{{d}}};
        CHECK(two_point_theorem(q) == t_sum_times(Rational(4) / Rational(d)));
    }
    for (int d = 1; d <= 4; ++d) {
        InvariantQuery q{2, 1, wp("1(E1),1(E1)"), wp("1(E1),1(E1)"), 2, CurveClass{{d}}};
        CHECK(two_point_theorem(q) == t_sum_times(Rational(4 * d)));
    }
}

TEST_CASE("theorem vanishing structure") {
    // a = 0 forces half-integral contracted genus for two-part mu
    InvariantQuery empty_sum{2, 1, wp("1(E1),1(E1)"), wp("1(E1),1(E1)"), 0, CurveClass{{1}}};
    CHECK(two_point_theorem(empty_sum).is_zero());

    // fundamental-class labels
    InvariantQuery with_one{2, 1, wp("2(E1)"), wp("1(1),1(E1)"), 1, CurveClass{{1}}};
    CHECK(two_point_theorem(with_one).is_zero());

    // beta not a chain multiple
    InvariantQuery non_chain{2, 3, wp("2(E1)"), wp("2(E1)"), 0, CurveClass{{1, 0, 1}}};
    CHECK(two_point_theorem(non_chain).is_zero());

    // label off the chain endpoints
    InvariantQuery off_chain{2, 3, wp("2(E1)"), wp("2(E2)"), 0, CurveClass{{0, 0, 1}}};
    CHECK(two_point_theorem(off_chain).is_zero());

    // parity
    InvariantQuery parity{2, 1, wp("2(E1)"), wp("2(E1)"), 1, CurveClass{{1}}};
    CHECK(two_point_theorem(parity).is_zero());
}

TEST_CASE("theorem input contracts") {
    InvariantQuery zero_beta{2, 1, wp("2(E1)"), wp("2(E1)"), 0, CurveClass{{0}}};
    CHECK_THROWS_AS(two_point_theorem(zero_beta), std::invalid_argument);
    InvariantQuery mismatch{3, 1, wp("2(E1)"), wp("2(E1),1(1)"), 0, CurveClass{{1}}};
    CHECK_THROWS_AS(two_point_theorem(mismatch), std::invalid_argument);
    InvariantQuery omega_label{2, 1, wp("2(w1)"), wp("2(E1)"), 0, CurveClass{{1}}};
    CHECK_THROWS_AS(two_point_theorem(omega_label), std::invalid_argument);
}

TEST_CASE("corollary matches the theorem at r = 1") {
    for (int a = 0; a <= 3; ++a)
        for (int d = 1; d <= 3; ++d)
            for (auto labels : {"2(E1)", "1(E1),1(E1)"}) {
                InvariantQuery q{2, 1, wp(labels), wp(labels), a, CurveClass{{d}}};
                CHECK(two_point_corollary(q) == two_point_theorem(q));
            }
}

TEST_CASE("corollary with omega labels") {
    // omega_2 meets the chain E_2 + E_3 once; E_2 meets it with -1
    InvariantQuery q_omega{2, 3, wp("2(w2)"), wp("2(w2)"), 0, CurveClass{{0, 2, 2}}};
    InvariantQuery q_e{2, 3, wp("2(E2)"), wp("2(E2)"), 0, CurveClass{{0, 2, 2}}};
    EqScalar v_omega = two_point_corollary(q_omega);
    EqScalar v_e = two_point_corollary(q_e);
    CHECK_FALSE(v_omega.is_zero());
    CHECK(v_e == v_omega * EqScalar(Rational(1)));  // (-1)^2 = 1 per the two labels

    // omega_1 is orthogonal to that chain
    InvariantQuery q_zero{2, 3, wp("2(w1)"), wp("2(w1)"), 0, CurveClass{{0, 2, 2}}};
    CHECK(two_point_corollary(q_zero).is_zero());

    // fundamental class kills the product
    InvariantQuery q_one{2, 1, wp("2(1)"), wp("2(E1)"), 0, CurveClass{{1}}};
    CHECK(two_point_corollary(q_one).is_zero());
}

TEST_CASE("audit: overlap agreement and the two discrepancy families") {
    // overlap: r = 2, chain E_1 + E_2, endpoint labels
    InvariantQuery overlap{2, 2, wp("2(E1)"), wp("2(E2)"), 0, CurveClass{{1, 1}}};
    CHECK(theorem_corollary_audit(overlap).equal);

    // diagonal family: i = j with r > 1 gives (-1)^l vs (-2)^l per label
    InvariantQuery diag{2, 2, wp("2(E1)"), wp("2(E1)"), 0, CurveClass{{2, 0}}};
    AuditReport rep = theorem_corollary_audit(diag);
    CHECK_FALSE(rep.equal);
    CHECK(rep.corollary_value == rep.theorem_value * EqScalar(Rational(4)));  // (-2/-1)^2

    // adjacent family: theorem vanishes, corollary picks up E_{i-1}.chain = 1
    InvariantQuery adj{2, 3, wp("2(E1)"), wp("2(E2)"), 0, CurveClass{{0, 1, 1}}};
    AuditReport rep2 = theorem_corollary_audit(adj);
    CHECK_FALSE(rep2.equal);
    CHECK(rep2.theorem_value.is_zero());
    CHECK_FALSE(rep2.corollary_value.is_zero());
}

TEST_CASE("disconnected assembly: single part equals connected") {
    for (int n = 1; n <= 4; ++n)
        for (int a = 0; a <= 2; ++a)
            for (int d = 1; d <= 2; ++d) {
                WeightedPartition w({WeightedPartition::Entry{n, CohLabel::E(1)}});
                InvariantQuery q{n, 1, w, w, a, CurveClass{{d}}};
                CHECK(two_point_disconnected(w, w, a, CurveClass{{d}}, 1) ==
                      two_point_corollary(q));
            }
}

TEST_CASE("disconnected assembly against a hand-built gluing sum") {
    // lambda = rho = (2,1)(E1,E1) at n = 3: splits are (empty | all),
    // ((1,E1) | (2,E1)) and ((2,E1) | (1,E1))
    const ArSurface& s = ArSurface::get(1);
    WeightedPartition w = wp("2(E1),1(E1)");
    int a = 1;
    CurveClass beta{{1}};

    EqScalar expected;
    {
        InvariantQuery full{3, 1, w, w, a, beta};
        expected += two_point_corollary(full);

        EqScalar p1 = orb_pairing(wp("1(E1)"), wp("1(E1)"), s);
        InvariantQuery sub1{2, 1, wp("2(E1)"), wp("2(E1)"), a, beta};
        expected += p1 * two_point_corollary(sub1);

        EqScalar p2 = orb_pairing(wp("2(E1)"), wp("2(E1)"), s);
        InvariantQuery sub2{1, 1, wp("1(E1)"), wp("1(E1)"), a, beta};
        expected += p2 * two_point_corollary(sub2);
    }
    CHECK(two_point_disconnected(w, w, a, beta, 1) == expected);
}

TEST_CASE("disconnected assembly vanishes when every split does") {
    WeightedPartition w = wp("1(1),1(1)");
    CHECK(two_point_disconnected(w, w, 0, CurveClass{{1}}, 1).is_zero());
}

TEST_CASE("divisor-type third insertions") {
    OrbClass x(wp("3(E1)"));
    CurveClass beta{{2}};

    CHECK(three_point_divisor(x, DivisorInsertion::identity, 0, x, 0, beta, 1).is_zero());

    EqScalar shifted = two_point_disconnected(x, x, 1, beta, 1);
    CHECK(three_point_divisor(x, DivisorInsertion::two_sector, 0, x, 0, beta, 1) == shifted);
    EqScalar shifted2 = two_point_disconnected(x, x, 3, beta, 1) * EqScalar(Rational(3));
    CHECK(three_point_divisor(x, DivisorInsertion::two_sector, 0, x, 2, beta, 1) == shifted2);

    EqScalar base = two_point_disconnected(x, x, 0, beta, 1);
    CHECK(three_point_divisor(x, DivisorInsertion::d_k, 1, x, 0, beta, 1) ==
          base * EqScalar(Rational(2)));  // beta . omega_1 = d = 2

    CHECK_THROWS_AS(three_point_divisor(x, DivisorInsertion::d_k, 1, x, 0, CurveClass{{0}}, 1),
                    std::invalid_argument);
}

TEST_CASE("three-point generating series") {
    OrbClass x(wp("3(E1)"));
    ThreePointSeries s = three_point_series(x, DivisorInsertion::two_sector, 0, x, 2, {3}, 1);
    CHECK(s.partial);  // no degree-0 source

    // the s^1 row reproduces the d = 1 invariants
    for (int a = 0; a <= 2; ++a) {
        EqScalar expect =
            three_point_divisor(x, DivisorInsertion::two_sector, 0, x, a, CurveClass{{1}}, 1);
        CHECK(s.series.coefficient({a, 1}) == expect);
    }

    // with a degree-0 source the u^a s^0 column is populated
    auto degree0 = [](int a) -> std::optional<EqScalar> {
        return EqScalar(Rational(a + 1));
    };
    ThreePointSeries s2 =
        three_point_series(x, DivisorInsertion::two_sector, 0, x, 2, {1}, 1, degree0);
    CHECK_FALSE(s2.partial);
    CHECK(s2.series.coefficient({1, 0}) == EqScalar(Rational(2)));

    CHECK_THROWS_AS(s.series.coefficient({0, 9}), truncation_error);
}

TEST_CASE("non-contiguous degrees contribute nothing") {
    OrbClass x(wp("2(E1)"));
    ThreePointSeries s = three_point_series(x, DivisorInsertion::two_sector, 0, x, 2,
                                            {1, 1, 1}, 3);
    for (int a = 0; a <= 2; ++a) CHECK(s.series.coefficient({a, 1, 0, 1}).is_zero());
}

TEST_CASE("swap symmetry and d-scaling sample") {
    for (auto [m1, m2] : {std::pair{"2(E1),1(E1)", "3(E1)"}, {"2(E2)", "1(E2),1(E2)"}}) {
        for (int a = 0; a <= 3; ++a) {
            InvariantQuery q{wp(m1).size(), 2, wp(m1), wp(m2), a, CurveClass{{0, 1}}};
            if (q.mu1.size() != q.mu2.size()) continue;
            InvariantQuery swapped{q.n, q.r, q.mu2, q.mu1, a, q.beta};
            CHECK(two_point_corollary(q) == two_point_corollary(swapped));
            for (int d = 2; d <= 5; ++d) {
                InvariantQuery qd{q.n, q.r, q.mu1, q.mu2, a, CurveClass{{0, d}}};
                CHECK(two_point_corollary(qd) ==
                      two_point_corollary(q) * EqScalar(pow_rational(Rational(d), a - 1)));
            }
        }
    }
}
