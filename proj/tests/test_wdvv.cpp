#include "symgw/frobenius_fixture.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace symgw;
using namespace symgw::wdvv;

TEST_CASE("the ten basis classes, grouped by age") {
    using B = Sym3Basis;
    CHECK(B::weighted_partition(B::A0) == WeightedPartition::parse("1(1),1(1),1(1)"));
    CHECK(B::weighted_partition(B::A1) == WeightedPartition::parse("1(1),1(1),1(E1)"));
    CHECK(B::weighted_partition(B::A2) == WeightedPartition::parse("1(1),1(E1),1(E1)"));
    CHECK(B::weighted_partition(B::A3) == WeightedPartition::parse("1(E1),1(E1),1(E1)"));
    CHECK(B::weighted_partition(B::B0) == WeightedPartition::parse("2(1),1(1)"));
    CHECK(B::weighted_partition(B::B3) == WeightedPartition::parse("2(E1),1(E1)"));
    CHECK(B::weighted_partition(B::C0) == WeightedPartition::parse("3(1)"));
    CHECK(B::weighted_partition(B::C1) == WeightedPartition::parse("3(E1)"));
    for (int i = 0; i < B::size; ++i) {
        int expected_age = i < 4 ? 0 : (i < 8 ? 1 : 2);
        CHECK(age(B::sector(i), 3) == expected_age);
        CHECK(B::weighted_partition(i).shape() == B::sector(i));
    }
}

TEST_CASE("zero stamping equals the monodromy classifier on all 220 triples") {
    auto fx = make_synthetic_fixture(2);
    WdvvSystem sys(fx.seed);
    ThreePtTable t = seed_table(sys, fx.seed);
    int count = 0;
    for (auto& [key, entry] : t.all()) {
        ++count;
        bool adm = Sym3Basis::triple_admissible(key[0], key[1], key[2]);
        CHECK(adm != (entry.status == EntryStatus::structurally_zero));
    }
    CHECK(count == 220);
}

TEST_CASE("malformed pairing input is rejected at the boundary") {
    auto fx = make_synthetic_fixture(2);

    SeedInput asym = fx.seed;
    asym.gram[0][3] += TruncatedSeries::constant({"s1"}, {2}, EqScalar(Rational(1)));
    CHECK_THROWS_AS(WdvvSystem(asym), std::invalid_argument);

    SeedInput off_block = fx.seed;
    auto one = TruncatedSeries::constant({"s1"}, {2}, EqScalar(Rational(1)));
    off_block.gram[0][8] = one;
    off_block.gram[8][0] = one;
    CHECK_THROWS_AS(WdvvSystem(off_block), std::invalid_argument);

    SeedInput bad_order = fx.seed;
    WdvvSystem sys(fx.seed);
    bad_order.entries[make_triple(0, 0, 0)] = TruncatedSeries({"s1"}, {5});
    CHECK_THROWS_AS(seed_table(sys, bad_order), seed_error);
}

TEST_CASE("disconnected invariants are bilinear over classes") {
    OrbClass x(WeightedPartition::parse("2(E1)"));
    OrbClass y(WeightedPartition::parse("1(E1),1(E1)"));
    OrbClass sum = x;
    sum += y * EqScalar(Rational(3));
    CurveClass beta{{1}};
    EqScalar direct = two_point_disconnected(sum, sum, 2, beta, 1);
    EqScalar expanded = two_point_disconnected(x, x, 2, beta, 1) +
                        EqScalar(Rational(3)) * two_point_disconnected(x, y, 2, beta, 1) +
                        EqScalar(Rational(3)) * two_point_disconnected(y, x, 2, beta, 1) +
                        EqScalar(Rational(9)) * two_point_disconnected(y, y, 2, beta, 1);
    CHECK(direct == expanded);
}

TEST_CASE("seeding with missing input lists every absent entry") {
    auto fx = make_synthetic_fixture(2);
    WdvvSystem sys(fx.seed);
    SeedInput empty;
    empty.s_order = 2;
    empty.gram = fx.seed.gram;
    try {
        seed_table(sys, empty);
        FAIL("expected seed_error");
    } catch (const seed_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("<a0,a0,a0>") != std::string::npos);
        CHECK(msg.find("<a0,b0,b0>") != std::string::npos);
        // every admissible step-(1) triple is reported
        for (auto& [key, series] : fx.seed.entries)
            CHECK(msg.find(triple_name(key)) != std::string::npos);
    }
}

TEST_CASE("wdvv relations hold on the fixture and flag perturbations") {
    auto fx = make_synthetic_fixture(3);
    WdvvSystem sys(fx.seed);
    ThreePtTable t(3);
    for (auto& [key, series] : fx.table)
        t.set(key, series, EntryStatus::known_input);

    // a sample of quadruples evaluates to zero through the Relation object
    for (auto quad : {std::array<int, 4>{0, 1, 2, 3}, {1, 1, 4, 8}, {4, 5, 6, 7}, {2, 8, 9, 9}}) {
        for (auto [ca, cb] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
            Relation rel = wdvv_relation(sys, quad, ca, cb);
            CHECK(rel.evaluate(t, sys).is_zero());
            // swapping the channels negates the residual form
            Relation swapped = wdvv_relation(sys, quad, cb, ca);
            TruncatedSeries sum = rel.evaluate(t, sys) + swapped.evaluate(t, sys);
            CHECK(sum.is_zero());
        }
    }

    auto key = make_triple(Sym3Basis::B1, Sym3Basis::B1, Sym3Basis::A2);
    TruncatedSeries bumped = t.series(key);
    bumped += TruncatedSeries::constant({"s1"}, {3}, EqScalar(Rational(1)));
    t.set(key, bumped, EntryStatus::known_input);
    CHECK_FALSE(verify_all_relations(sys, t).empty());
}

TEST_CASE("step-(3) relations reduce to two unknown-bearing terms after stamping") {
    auto fx = make_synthetic_fixture(2);
    WdvvSystem sys(fx.seed);
    ThreePtTable t = seed_table(sys, fx.seed);
    for (auto [i, j] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
        Relation rel = wdvv_relation(sys, {i, j, 1, 1}, 1, 2);
        std::set<TripleKey> unknowns;
        for (auto& term : rel.terms) {
            for (auto& key : {term.left, term.right}) {
                if (t.status(key) != EntryStatus::unknown) continue;
                // drop terms whose partner is structurally zero
                const TripleKey& other = (key == term.left) ? term.right : term.left;
                if (t.status(other) == EntryStatus::structurally_zero) continue;
                unknowns.insert(key);
            }
        }
        CHECK(unknowns.size() == 2);
        CHECK(unknowns.count(make_triple(i, j, 2)) == 1);
        CHECK(unknowns.count(make_triple(i, j, 3)) == 1);
    }
}

TEST_CASE("solve reproduces the fixture and passes verification") {
    auto fx = make_synthetic_fixture(4);
    WdvvSystem sys(fx.seed);
    ThreePtTable t = seed_table(sys, fx.seed);
    solve_procedure(sys, t);

    int derived = 0;
    for (auto& [key, series] : fx.table) {
        if (t.status(key) == EntryStatus::derived) ++derived;
        CHECK(t.series(key) == series);
    }
    CHECK(derived == 38);
    CHECK(verify_all_relations(sys, t).empty());
}

TEST_CASE("solve is independent of iteration order within steps") {
    auto fx = make_synthetic_fixture(3);
    WdvvSystem sys(fx.seed);
    ThreePtTable a = seed_table(sys, fx.seed);
    ThreePtTable b = seed_table(sys, fx.seed);
    solve_procedure(sys, a);
    solve_procedure(sys, b, SolveOptions{true});
    for (auto& [key, entry] : a.all()) CHECK(b.series(key) == entry.series);
}

TEST_CASE("pivot failure is reported at step (3)") {
    auto bad = make_pivot_failure_fixture(2);
    WdvvSystem sys(bad.seed);
    ThreePtTable t = seed_table(sys, bad.seed);
    CHECK_THROWS_MATCHES(solve_procedure(sys, t), pivot_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("<a2^,a1,a1>")));
}

TEST_CASE("deleting a required entry gives an out-of-order error naming it") {
    auto fx = make_synthetic_fixture(2);
    WdvvSystem sys(fx.seed);
    ThreePtTable t = seed_table(sys, fx.seed);
    t.forget(make_triple(Sym3Basis::A1, Sym3Basis::A1, Sym3Basis::A2));
    CHECK_THROWS_MATCHES(solve_procedure(sys, t), out_of_order_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("<a1,a1,a2>")));
}

TEST_CASE("tables truncated at s^0 are checked at s^0") {
    auto fx = make_synthetic_fixture(0);
    WdvvSystem sys(fx.seed);
    ThreePtTable t = seed_table(sys, fx.seed);
    solve_procedure(sys, t);
    CHECK(verify_all_relations(sys, t).empty());
    for (auto& [key, series] : fx.table) CHECK(t.series(key) == series);
}

TEST_CASE("geometric seeding computes positive degrees and demands degree-0 data") {
    // complete degree-0 input: zero for every required entry
    std::map<TripleKey, EqScalar> degree0;
    auto fx = make_synthetic_fixture(2);
    for (auto& [key, series] : fx.seed.entries) degree0[key] = EqScalar();
    SeedInput seed = seed_geometric(degree0, 2);

    // positive-degree part of an a1-insertion entry follows the divisor rule
    // with beta . E1 = -2d
    const ArSurface& s = ArSurface::get(1);
    using B = Sym3Basis;
    Rational e1_self = s.chain_label_intersection(1, 1, CohLabel::E(1));
    CHECK(e1_self == -2);
    for (auto [x, z] : {std::pair{B::B1, B::B1}, {B::C0, B::C1}, {B::A2, B::A3}}) {
        TripleKey key = make_triple(x, B::A1, z);
        if (!seed.entries.count(key)) continue;
        for (int d = 1; d <= 2; ++d) {
            EqScalar expect = EqScalar(e1_self * d) *
                              two_point_disconnected(B::weighted_partition(x),
                                                     B::weighted_partition(z), 0,
                                                     CurveClass{{d}}, 1);
            CHECK(seed.entries.at(key).coefficient({d}) == expect);
        }
    }
    // (2)-sector insertion shifts the extended degree
    {
        TripleKey key = make_triple(B::B0, B::B1, B::C1);
        EqScalar expect = two_point_disconnected(B::weighted_partition(B::B1),
                                                 B::weighted_partition(B::C1), 1,
                                                 CurveClass{{1}}, 1);
        CHECK(seed.entries.at(key).coefficient({1}) == expect);
    }
    // a0-insertion entries have no positive-degree part
    for (auto& [key, series] : seed.entries) {
        bool has_a0 = false;
        for (int idx : key)
            if (idx == B::A0) has_a0 = true;
        if (!has_a0) continue;
        for (int d = 1; d <= 2; ++d) CHECK(series.coefficient({d}).is_zero());
    }

    degree0.erase(make_triple(B::A0, B::A0, B::A0));
    CHECK_THROWS_MATCHES(seed_geometric(degree0, 2), seed_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("<a0,a0,a0>")));
}
