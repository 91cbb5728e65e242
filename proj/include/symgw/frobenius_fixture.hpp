#pragma once

// Synthetic consistent fixture for the WDVV solver.
//
// The table must exhibit the exact sector pattern of the Sym^3(A_1) basis
// (sectors of dimension 4, 4, 2 with the S_3 monodromy zeros) while keeping
// associativity exact, without presenting invented geometric numbers as
// ground truth. Both come for free from the center of the finite groupoid
// algebra C(X^3) x| S_3 with X a two-point set:
//
//   - center classes are indexed by (conjugacy class, orbit of fixed
//     points), giving sector dimensions 4 (identity), 4 (transpositions),
//     2 (3-cycles);
//   - triple values <x,y,z> = theta(x y z) for a trace theta supported on
//     the identity group component, so the zero pattern is exactly the
//     S_3 monodromy pattern and WDVV is associativity;
//   - the trace weights are unit series in s1 and each basis class carries
//     a unit-series rescaling, so entries, pairing and duals are honest
//     series while every structural zero survives.
//
// The age-0 classes are the powers 1, t, t^2, t^3 of a coordinate t that
// separates the four untwisted orbits. That makes a1 a1 proportional to a2
// and a1 a2 proportional to a3, which is what the solve's step-(3) pivot
// pattern requires; the c-part of b0^2 is proportional to c0, which is the
// step-(5) pattern.

#include "symgw/wdvv.hpp"

#include <array>
#include <map>
#include <vector>

namespace symgw::wdvv {

struct SyntheticFixture {
    SeedInput seed;                                // gram + step-(1) entries
    std::map<TripleKey, TruncatedSeries> table;    // the complete table
};

namespace fixture_detail {

// S_3 as permutations of {0,1,2}: id, (01), (02), (12), (012), (021)
inline const std::array<std::array<int, 3>, 6>& s3_elements() {
    static const std::array<std::array<int, 3>, 6> g = {{
        {0, 1, 2},  // id
        {1, 0, 2},  // (01)
        {2, 1, 0},  // (02)
        {0, 2, 1},  // (12)
        {1, 2, 0},  // (012): 0->1->2->0
        {2, 0, 1},  // (021)
    }};
    return g;
}

inline int s3_compose(int a, int b) {
    // (g h)(i) = g(h(i))
    const auto& els = s3_elements();
    std::array<int, 3> prod;
    for (int i = 0; i < 3; ++i) prod[i] = els[a][els[b][i]];
    for (int k = 0; k < 6; ++k)
        if (els[k] == prod) return k;
    return -1;
}

// action on points of X^3 (bitmask x, bit i set = letter q at position i):
// (g . x)_i = x_{g^{-1}(i)}
inline int s3_act(int g, int x) {
    const auto& els = s3_elements();
    std::array<int, 3> inv;
    for (int i = 0; i < 3; ++i) inv[els[g][i]] = i;
    int y = 0;
    for (int i = 0; i < 3; ++i)
        if (x & (1 << inv[i])) y |= (1 << i);
    return y;
}

// elements of the groupoid algebra: dense over (point, group) pairs
using Element = std::array<TruncatedSeries, 48>;  // index = x * 6 + g

inline int popcount3(int x) { return ((x >> 0) & 1) + ((x >> 1) & 1) + ((x >> 2) & 1); }

}  // namespace fixture_detail

inline SyntheticFixture make_synthetic_fixture(int s_order) {
    using namespace fixture_detail;
    auto zero = TruncatedSeries({"s1"}, {s_order});
    auto series_poly = [&](std::vector<Rational> coeffs) {
        TruncatedSeries s({"s1"}, {s_order});
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (static_cast<int>(i) > s_order) break;
            s.set_coefficient({static_cast<int>(i)}, EqScalar(coeffs[i]));
        }
        return s;
    };

    // trace weights per untwisted orbit (number of q letters), unit series
    std::array<TruncatedSeries, 4> w;
    for (int k = 0; k < 4; ++k) w[k] = series_poly({Rational(k + 1), Rational(k)});

    Element empty;
    empty.fill(zero);

    auto add_point = [&](Element& e, int x, int g, const TruncatedSeries& c) {
        e[x * 6 + g] += c;
    };

    // center building blocks
    std::array<Element, 4> e_orbit;  // identity component, by q-count
    e_orbit.fill(empty);
    for (int x = 0; x < 8; ++x)
        add_point(e_orbit[popcount3(x)], x, 0,
                  TruncatedSeries::constant({"s1"}, {s_order}, EqScalar(Rational(1))));

    // transposition classes B[u][v]: u = letter on the swapped pair,
    // v = letter on the fixed position (0 = p, 1 = q)
    std::array<std::array<Element, 2>, 2> B;
    for (auto& row : B) row.fill(empty);
    const int transpositions[3] = {1, 2, 3};           // (01), (02), (12)
    const int fixed_position[3] = {2, 1, 0};           // position fixed by each
    for (int ti = 0; ti < 3; ++ti) {
        int g = transpositions[ti];
        int lone = fixed_position[ti];
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v) {
                int x = 0;
                for (int pos = 0; pos < 3; ++pos) {
                    int letter = (pos == lone) ? v : u;
                    if (letter) x |= (1 << pos);
                }
                add_point(B[u][v], x, g,
                          TruncatedSeries::constant({"s1"}, {s_order}, EqScalar(Rational(1))));
            }
    }

    // 3-cycle classes C[x] over the diagonal points
    std::array<Element, 2> C;
    C.fill(empty);
    for (int g : {4, 5})
        for (int v = 0; v < 2; ++v)
            add_point(C[v], v ? 7 : 0, g,
                      TruncatedSeries::constant({"s1"}, {s_order}, EqScalar(Rational(1))));

    auto scale = [&](const Element& e, const TruncatedSeries& c) {
        Element out = empty;
        for (int i = 0; i < 48; ++i)
            if (!e[i].is_zero()) out[i] = e[i] * c;
        return out;
    };
    auto combine = [&](std::vector<std::pair<Rational, const Element*>> parts) {
        Element out = empty;
        for (auto& [coeff, el] : parts)
            for (int i = 0; i < 48; ++i)
                if (!(*el)[i].is_zero())
                    out[i] += (*el)[i] * EqScalar(coeff);
        return out;
    };

    // t = number of q letters, as a central function on the identity part
    Element unit = combine({{1, &e_orbit[0]}, {1, &e_orbit[1]}, {1, &e_orbit[2]}, {1, &e_orbit[3]}});
    Element t1 = combine({{1, &e_orbit[1]}, {2, &e_orbit[2]}, {3, &e_orbit[3]}});
    Element t2 = combine({{1, &e_orbit[1]}, {4, &e_orbit[2]}, {9, &e_orbit[3]}});
    Element t3 = combine({{1, &e_orbit[1]}, {8, &e_orbit[2]}, {27, &e_orbit[3]}});

    Element b_all = combine({{1, &B[0][0]}, {1, &B[0][1]}, {1, &B[1][0]}, {1, &B[1][1]}});
    Element b_lone_q = combine({{1, &B[0][1]}, {1, &B[1][1]}});
    Element b_pair_q = combine({{1, &B[1][0]}, {1, &B[1][1]}});
    Element b_both_q = combine({{1, &B[1][1]}});
    Element c_all = combine({{1, &C[0]}, {1, &C[1]}});
    Element c_q = combine({{1, &C[1]}});

    // per-class unit rescalings keep zeros intact but make entries, duals
    // and pivots honest series
    std::array<Element, Sym3Basis::size> basis;
    const Element* raw[Sym3Basis::size] = {&unit,  &t1,       &t2,       &t3,      &b_all,
                                           &b_lone_q, &b_pair_q, &b_both_q, &c_all, &c_q};
    for (int i = 0; i < Sym3Basis::size; ++i)
        basis[i] = scale(*raw[i], series_poly({Rational(1), Rational(i)}));

    // theta(u v) with theta supported on the identity group component
    auto theta_of_product = [&](const Element& u, const Element& v) {
        TruncatedSeries acc = zero;
        for (int x = 0; x < 8; ++x) {
            for (int g = 0; g < 6; ++g) {
                const TruncatedSeries& cu = u[x * 6 + g];
                if (cu.is_zero()) continue;
                // need h with g h = id and y with x = g . y
                std::array<int, 3> ginv_arr;
                const auto& els = s3_elements();
                for (int i = 0; i < 3; ++i) ginv_arr[els[g][i]] = i;
                int ginv = -1;
                for (int k = 0; k < 6; ++k)
                    if (els[k] == ginv_arr) { ginv = k; break; }
                int y = s3_act(ginv, x);
                const TruncatedSeries& cv = v[y * 6 + ginv];
                if (cv.is_zero()) continue;
                acc += cu * cv * w[popcount3(x)];
            }
        }
        return acc;
    };

    auto multiply = [&](const Element& u, const Element& v) {
        Element out = empty;
        for (int x = 0; x < 8; ++x)
            for (int g = 0; g < 6; ++g) {
                const TruncatedSeries& cu = u[x * 6 + g];
                if (cu.is_zero()) continue;
                for (int y = 0; y < 8; ++y)
                    for (int h = 0; h < 6; ++h) {
                        const TruncatedSeries& cv = v[y * 6 + h];
                        if (cv.is_zero()) continue;
                        if (s3_act(g, y) != x) continue;
                        out[x * 6 + s3_compose(g, h)] += cu * cv;
                    }
            }
        return out;
    };

    SyntheticFixture fx;
    fx.seed.s_order = s_order;
    fx.seed.gram.assign(Sym3Basis::size, std::vector<TruncatedSeries>(Sym3Basis::size, zero));
    for (int i = 0; i < Sym3Basis::size; ++i)
        for (int j = 0; j < Sym3Basis::size; ++j)
            fx.seed.gram[i][j] = theta_of_product(basis[i], basis[j]);

    for (int i = 0; i < Sym3Basis::size; ++i) {
        for (int j = i; j < Sym3Basis::size; ++j) {
            Element prod = multiply(basis[i], basis[j]);
            for (int k = j; k < Sym3Basis::size; ++k)
                fx.table[{i, j, k}] = theta_of_product(prod, basis[k]);
        }
    }

    // step-(1) subset: triples with an a0, a1 or b0 insertion
    using BI = Sym3Basis;
    for (auto& [key, series] : fx.table) {
        bool step1 = false;
        for (int idx : key)
            if (idx == BI::A0 || idx == BI::A1 || idx == BI::B0) step1 = true;
        if (step1 && BI::triple_admissible(key[0], key[1], key[2]))
            fx.seed.entries[key] = series;
    }
    return fx;
}

// Negative fixture: every <., a1, a1> entry is wiped, so <a3^, a1, a1>
// still vanishes but the invertibility required of the step-(3) pivot
// <a2^, a1, a1> fails.
inline SyntheticFixture make_pivot_failure_fixture(int s_order) {
    SyntheticFixture fx = make_synthetic_fixture(s_order);
    auto zero = TruncatedSeries({"s1"}, {s_order});
    for (int m = 0; m < Sym3Basis::size; ++m) {
        TripleKey key = make_triple(m, Sym3Basis::A1, Sym3Basis::A1);
        auto it = fx.seed.entries.find(key);
        if (it != fx.seed.entries.end()) it->second = zero;
        fx.table[key] = zero;
    }
    return fx;
}

}  // namespace symgw::wdvv
