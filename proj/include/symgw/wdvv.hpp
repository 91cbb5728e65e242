#pragma once

// WDVV elimination for the 3-point functions of [Sym^3(A_1)].
//
// The ten-class basis is grouped by age:
//   a0 = 1(1)^3, a1 = 1(1)^2 1(E1), a2 = 1(1) 1(E1)^2, a3 = 1(E1)^3   (age 0)
//   b0 = 1(1) 2(1), b1 = 1(E1) 2(1), b2 = 1(1) 2(E1), b3 = 1(E1) 2(E1) (age 1)
//   c0 = 3(1), c1 = 3(E1)                                              (age 2)
//
// A table maps unordered basis triples to truncated series in s1. Seeding
// fills the triples carrying an a0, a1 or b0 insertion and stamps the
// monodromy-inadmissible triples zero; the solve then eliminates the rest in
// a fixed step order, checking the required vanishing/invertibility of each
// pivot before dividing. Associativity of the whole table is re-checked by
// verify_all_relations.

#include "symgw/invariants.hpp"
#include "symgw/orb_class.hpp"
#include "symgw/series.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symgw::wdvv {

class pivot_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class out_of_order_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class seed_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Sym3Basis {
    static constexpr int size = 10;
    enum Index { A0 = 0, A1, A2, A3, B0, B1, B2, B3, C0, C1 };

    static const std::vector<std::string>& names() {
        static const std::vector<std::string> n = {"a0", "a1", "a2", "a3", "b0",
                                                   "b1", "b2", "b3", "c0", "c1"};
        return n;
    }

    static int index_of(const std::string& name) {
        const auto& n = names();
        for (int i = 0; i < size; ++i)
            if (n[i] == name) return i;
        throw std::invalid_argument("unknown basis class: " + name);
    }

    // sector (underlying partition of 3) of each class
    static const Partition& sector(int idx) {
        static const Partition untwisted{1, 1, 1}, two{2, 1}, three{3};
        if (idx < 4) return untwisted;
        if (idx < 8) return two;
        if (idx < size) return three;
        throw std::out_of_range("basis index out of range");
    }

    static WeightedPartition weighted_partition(int idx) {
        auto one = CohLabel::one();
        auto e1 = CohLabel::E(1);
        using E = WeightedPartition::Entry;
        switch (idx) {
            case A0: return WeightedPartition({E{1, one}, E{1, one}, E{1, one}});
            case A1: return WeightedPartition({E{1, one}, E{1, one}, E{1, e1}});
            case A2: return WeightedPartition({E{1, one}, E{1, e1}, E{1, e1}});
            case A3: return WeightedPartition({E{1, e1}, E{1, e1}, E{1, e1}});
            case B0: return WeightedPartition({E{2, one}, E{1, one}});
            case B1: return WeightedPartition({E{2, one}, E{1, e1}});
            case B2: return WeightedPartition({E{2, e1}, E{1, one}});
            case B3: return WeightedPartition({E{2, e1}, E{1, e1}});
            case C0: return WeightedPartition({E{3, one}});
            case C1: return WeightedPartition({E{3, e1}});
        }
        throw std::out_of_range("basis index out of range");
    }

    static bool triple_admissible(int i, int j, int k) {
        return monodromy_admissible(sector(i), sector(j), sector(k));
    }
};

using TripleKey = std::array<int, 3>;

inline TripleKey make_triple(int i, int j, int k) {
    TripleKey t{i, j, k};
    std::sort(t.begin(), t.end());
    return t;
}

inline std::string triple_name(const TripleKey& t) {
    const auto& n = Sym3Basis::names();
    return "<" + n[t[0]] + "," + n[t[1]] + "," + n[t[2]] + ">";
}

enum class EntryStatus { unknown, known_input, derived, structurally_zero };

struct TableEntry {
    TruncatedSeries series;
    EntryStatus status = EntryStatus::unknown;
};

class ThreePtTable {
public:
    explicit ThreePtTable(int s_order) : s_order_(s_order) {
        for (int i = 0; i < Sym3Basis::size; ++i)
            for (int j = i; j < Sym3Basis::size; ++j)
                for (int k = j; k < Sym3Basis::size; ++k)
                    entries_[{i, j, k}] = TableEntry{zero_series(), EntryStatus::unknown};
    }

    int s_order() const { return s_order_; }
    TruncatedSeries zero_series() const { return TruncatedSeries({"s1"}, {s_order_}); }

    EntryStatus status(const TripleKey& t) const { return entries_.at(t).status; }

    const TruncatedSeries& series(const TripleKey& t) const {
        const TableEntry& e = entries_.at(t);
        if (e.status == EntryStatus::unknown)
            throw out_of_order_error("entry " + triple_name(t) + " required but still unknown");
        return e.series;
    }

    void set(const TripleKey& t, TruncatedSeries s, EntryStatus st) {
        entries_.at(t) = TableEntry{std::move(s), st};
    }

    // Reverts an entry to unknown (for contract tests on the solve order).
    void forget(const TripleKey& t) { entries_.at(t) = TableEntry{zero_series(), EntryStatus::unknown}; }

    std::vector<TripleKey> entries_with_status(EntryStatus st) const {
        std::vector<TripleKey> out;
        for (auto& [t, e] : entries_)
            if (e.status == st) out.push_back(t);
        return out;
    }

    const std::map<TripleKey, TableEntry>& all() const { return entries_; }

private:
    int s_order_;
    std::map<TripleKey, TableEntry> entries_;
};

// Pairing and seed data. The Gram matrix is block-diagonal across sectors
// and must have an invertible degree-0 part blockwise; duals are computed
// from it over the series ring.
struct SeedInput {
    int s_order = 0;
    std::vector<std::vector<TruncatedSeries>> gram;  // 10 x 10
    std::map<TripleKey, TruncatedSeries> entries;    // step-(1) triples
};

class WdvvSystem {
public:
    explicit WdvvSystem(const SeedInput& input)
        : s_order_(input.s_order), gram_(input.gram) {
        if (gram_.size() != Sym3Basis::size)
            throw std::invalid_argument("gram matrix must be 10 x 10");
        for (auto& row : gram_)
            if (row.size() != Sym3Basis::size)
                throw std::invalid_argument("gram matrix must be 10 x 10");
        auto sector_of = [](int i) { return i < 4 ? 0 : (i < 8 ? 1 : 2); };
        for (int i = 0; i < Sym3Basis::size; ++i) {
            for (int j = 0; j < Sym3Basis::size; ++j) {
                if (gram_[i][j].orders() != std::vector<int>{s_order_})
                    throw std::invalid_argument("gram entries must be s1-series of order " +
                                                std::to_string(s_order_));
                if (!(gram_[i][j] == gram_[j][i]))
                    throw std::invalid_argument("pairing must be symmetric: <" +
                                                Sym3Basis::names()[i] + "," +
                                                Sym3Basis::names()[j] + ">");
                if (sector_of(i) != sector_of(j) && !gram_[i][j].is_zero())
                    throw std::invalid_argument(
                        "pairing must be block-diagonal across sectors: <" +
                        Sym3Basis::names()[i] + "," + Sym3Basis::names()[j] + ">");
            }
        }
        compute_duals();
    }

    int s_order() const { return s_order_; }
    const std::vector<std::vector<TruncatedSeries>>& gram() const { return gram_; }
    // dual(i)[m]: coefficient of basis class m in the pairing-dual of class i
    const std::vector<TruncatedSeries>& dual(int i) const { return duals_.at(i); }

    TruncatedSeries zero_series() const { return TruncatedSeries({"s1"}, {s_order_}); }

    // <i^vee, y, z> expanded over the table
    TruncatedSeries dual_triple(const ThreePtTable& t, int i, int y, int z) const {
        TruncatedSeries acc = zero_series();
        for (int m = 0; m < Sym3Basis::size; ++m) {
            if (duals_[i][m].is_zero()) continue;
            acc += duals_[i][m] * t.series(make_triple(m, y, z));
        }
        return acc;
    }

private:
    void compute_duals();

    int s_order_;
    std::vector<std::vector<TruncatedSeries>> gram_;
    std::vector<std::vector<TruncatedSeries>> duals_;
};

inline void WdvvSystem::compute_duals() {
    duals_.assign(Sym3Basis::size, std::vector<TruncatedSeries>(Sym3Basis::size, zero_series()));
    // invert blockwise per sector
    std::vector<std::pair<int, int>> blocks = {{0, 4}, {4, 8}, {8, 10}};
    for (auto [lo, hi] : blocks) {
        int m = hi - lo;
        std::vector<std::vector<TruncatedSeries>> aug(
            static_cast<size_t>(m),
            std::vector<TruncatedSeries>(static_cast<size_t>(2 * m), zero_series()));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) aug[i][j] = gram_[lo + i][lo + j];
            aug[i][m + i] =
                TruncatedSeries::constant({"s1"}, {s_order_}, EqScalar(Rational(1)));
        }
        for (int col = 0; col < m; ++col) {
            int pivot = -1;
            for (int row = col; row < m; ++row)
                if (!aug[row][col].constant_term().is_zero()) { pivot = row; break; }
            if (pivot < 0)
                throw std::domain_error("pairing block is degenerate at degree 0");
            std::swap(aug[col], aug[pivot]);
            TruncatedSeries inv = aug[col][col].inverse();
            for (int b = 0; b < 2 * m; ++b) aug[col][b] *= inv;
            for (int row = 0; row < m; ++row) {
                if (row == col || aug[row][col].is_zero()) continue;
                TruncatedSeries f = aug[row][col];
                for (int b = 0; b < 2 * m; ++b) aug[row][b] -= f * aug[col][b];
            }
        }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) duals_[lo + i][lo + j] = aug[j][m + i];
    }
}

// Seed a table: stamp inadmissible triples structurally zero; fill the
// step-(1) triples (one insertion from a0, a1, b0) from the input; error
// listing every missing required entry.
inline ThreePtTable seed_table(const WdvvSystem& sys, const SeedInput& input) {
    ThreePtTable table(sys.s_order());
    std::vector<std::string> missing;
    for (int i = 0; i < Sym3Basis::size; ++i) {
        for (int j = i; j < Sym3Basis::size; ++j) {
            for (int k = j; k < Sym3Basis::size; ++k) {
                TripleKey t{i, j, k};
                if (!Sym3Basis::triple_admissible(i, j, k)) {
                    table.set(t, table.zero_series(), EntryStatus::structurally_zero);
                    continue;
                }
                bool step1 = (i == Sym3Basis::A0 || i == Sym3Basis::A1 || i == Sym3Basis::B0 ||
                              j == Sym3Basis::A0 || j == Sym3Basis::A1 || j == Sym3Basis::B0 ||
                              k == Sym3Basis::A0 || k == Sym3Basis::A1 || k == Sym3Basis::B0);
                if (!step1) continue;
                auto it = input.entries.find(t);
                if (it == input.entries.end()) {
                    missing.push_back(triple_name(t));
                    continue;
                }
                if (it->second.orders() != std::vector<int>{sys.s_order()})
                    throw seed_error("entry " + triple_name(t) +
                                     " has the wrong truncation order");
                table.set(t, it->second, EntryStatus::known_input);
            }
        }
    }
    if (!missing.empty()) {
        std::ostringstream msg;
        msg << "seed_table: missing required degree data for";
        for (auto& name : missing) msg << " " << name;
        throw seed_error(msg.str());
    }
    return table;
}

// A WDVV relation instance: for the quadruple (q0,q1,q2,q3) the channel
// sums over (q0 q1 | q2 q3) and (q0 q2 | q1 q3) agree. Terms carry the dual
// expansion coefficients; evaluation is sum coeff * T[left] * T[right].
struct Relation {
    struct Term {
        TripleKey left;
        TripleKey right;
        TruncatedSeries coeff;
    };
    std::array<int, 4> quadruple{};
    std::vector<Term> terms;  // residual form: channel A minus channel B

    TruncatedSeries evaluate(const ThreePtTable& t, const WdvvSystem& sys) const {
        TruncatedSeries acc = sys.zero_series();
        for (const auto& term : terms)
            acc += term.coeff * t.series(term.left) * t.series(term.right);
        return acc;
    }
};

inline Relation wdvv_relation(const WdvvSystem& sys, const std::array<int, 4>& quad,
                              int channel_a = 1, int channel_b = 2) {
    // channel c in {1,2,3}: pair quad[0] with quad[c]
    auto channel_terms = [&](int c, bool negate) {
        std::vector<Relation::Term> out;
        std::array<int, 3> rest;
        int pos = 0;
        for (int i = 1; i < 4; ++i)
            if (i != c) rest[pos++] = quad[i];
        int x = quad[0], y = quad[c], z = rest[0], w = rest[1];
        for (int alpha = 0; alpha < Sym3Basis::size; ++alpha) {
            for (int m = 0; m < Sym3Basis::size; ++m) {
                const TruncatedSeries& g = sys.dual(alpha)[m];
                if (g.is_zero()) continue;
                Relation::Term term{make_triple(x, y, alpha), make_triple(m, z, w),
                                    negate ? -g : g};
                out.push_back(std::move(term));
            }
        }
        return out;
    };
    Relation rel;
    rel.quadruple = quad;
    rel.terms = channel_terms(channel_a, false);
    auto b = channel_terms(channel_b, true);
    rel.terms.insert(rel.terms.end(), b.begin(), b.end());
    return rel;
}

namespace detail {

struct ChannelSum {
    TruncatedSeries known;
    // unknown entries with their (known) dual-side cofactor
    std::vector<std::pair<TripleKey, TruncatedSeries>> unknown;
};

// sum_alpha <x,y,alpha><alpha^vee,z,w>; unknown first factors are collected
// unless their cofactor vanishes identically.
inline ChannelSum channel_sum(const WdvvSystem& sys, const ThreePtTable& t, int x, int y, int z,
                              int w) {
    ChannelSum cs{sys.zero_series(), {}};
    for (int alpha = 0; alpha < Sym3Basis::size; ++alpha) {
        TruncatedSeries cof = sys.dual_triple(t, alpha, z, w);
        if (cof.is_zero()) continue;
        TripleKey first = make_triple(x, y, alpha);
        if (t.status(first) == EntryStatus::unknown) {
            cs.unknown.push_back({first, cof});
        } else {
            cs.known += t.series(first) * cof;
        }
    }
    return cs;
}

// Solve the single unknown `target` from the WDVV relation with channels
// (x y | z w) = (x z | y w).
inline void solve_target(const WdvvSystem& sys, ThreePtTable& t, const TripleKey& target, int x,
                         int y, int z, int w) {
    if (t.status(target) != EntryStatus::unknown) return;
    ChannelSum lhs = channel_sum(sys, t, x, y, z, w);
    ChannelSum rhs = channel_sum(sys, t, x, z, y, w);
    if (!rhs.unknown.empty())
        throw out_of_order_error("entry " + triple_name(rhs.unknown.front().first) +
                                 " required but still unknown");
    std::optional<TruncatedSeries> pivot;
    for (auto& [key, cof] : lhs.unknown) {
        if (key == target) {
            pivot = cof;
            continue;
        }
        throw out_of_order_error("entry " + triple_name(key) + " required but still unknown");
    }
    if (!pivot)
        throw std::logic_error("target " + triple_name(target) + " absent from its own relation");
    if (pivot->constant_term().is_zero())
        throw pivot_error("pivot coefficient for " + triple_name(target) +
                          " has vanishing degree-0 term");
    t.set(target, (rhs.known - lhs.known) * pivot->inverse(), EntryStatus::derived);
}

}  // namespace detail

struct SolveOptions {
    // Reverse the target iteration order inside each step; the result must
    // not depend on it.
    bool reverse_within_step = false;
};

// The elimination, in the fixed step order with pivot prechecks:
//   (3) <a_i,a_j,a2> then <a3,a3,a3>
//   (4) <b_i,b_j,a_k> and <c_i,c_j,a_k>
//   (5) <t1,t2,c0>
//   (6) <t1,t2,c1>
inline void solve_procedure(const WdvvSystem& sys, ThreePtTable& t,
                            const SolveOptions& opts = {}) {
    using B = Sym3Basis;
    auto ordered = [&](std::vector<std::array<int, 2>> v) {
        if (opts.reverse_within_step) std::reverse(v.begin(), v.end());
        return v;
    };
    auto require_identically_zero = [&](int dual_idx, int y, int z, const std::string& what) {
        if (!sys.dual_triple(t, dual_idx, y, z).is_zero())
            throw pivot_error("pivot check failed: " + what + " expected identically zero");
    };
    auto require_unit = [&](int dual_idx, int y, int z, const std::string& what) {
        TruncatedSeries p = sys.dual_triple(t, dual_idx, y, z);
        if (p.constant_term().is_zero())
            throw pivot_error("pivot check failed: " + what +
                              " expected invertible degree-0 term");
        return p;
    };

    // step (3): pivots over the age-0 sector
    require_identically_zero(B::A3, B::A1, B::A1, "<a3^,a1,a1>");
    require_unit(B::A2, B::A1, B::A1, "<a2^,a1,a1>");
    for (auto [i, j] : ordered({{B::A2, B::A2}, {B::A2, B::A3}, {B::A3, B::A3}}))
        detail::solve_target(sys, t, make_triple(i, j, B::A2), i, j, B::A1, B::A1);
    require_unit(B::A3, B::A1, B::A2, "<a3^,a1,a2>");
    detail::solve_target(sys, t, make_triple(B::A3, B::A3, B::A3), B::A3, B::A3, B::A1, B::A2);

    // step (4): same pattern for the b- and c-sectors against a2, a3
    for (auto fam : {std::vector<int>{B::B0, B::B1, B::B2, B::B3}, std::vector<int>{B::C0, B::C1}}) {
        std::vector<std::array<int, 2>> pairs;
        for (size_t p = 0; p < fam.size(); ++p)
            for (size_t q = p; q < fam.size(); ++q) pairs.push_back({fam[p], fam[q]});
        for (auto [i, j] : ordered(pairs))
            detail::solve_target(sys, t, make_triple(i, j, B::A2), i, j, B::A1, B::A1);
        for (auto [i, j] : ordered(pairs))
            detail::solve_target(sys, t, make_triple(i, j, B::A3), i, j, B::A1, B::A2);
    }

    // step (5): <t1,t2,c0> against the twisted divisor b0
    require_identically_zero(B::C1, B::B0, B::B0, "<c1^,b0,b0>");
    require_unit(B::C0, B::B0, B::B0, "<c0^,b0,b0>");
    {
        std::vector<int> taus = {B::B0, B::B1, B::B2, B::B3, B::C0, B::C1};
        std::vector<std::array<int, 2>> pairs;
        for (size_t p = 0; p < taus.size(); ++p)
            for (size_t q = p; q < taus.size(); ++q) pairs.push_back({taus[p], taus[q]});
        for (auto [t1, t2] : ordered(pairs))
            detail::solve_target(sys, t, make_triple(t1, t2, B::C0), t1, t2, B::B0, B::B0);
    }

    // step (6): <t1,t2,c1>
    require_unit(B::C1, B::C0, B::A1, "<c1^,c0,a1>");
    {
        std::vector<int> taus = {B::B0, B::B1, B::B2, B::B3, B::C1};
        std::vector<std::array<int, 2>> pairs;
        for (size_t p = 0; p < taus.size(); ++p)
            for (size_t q = p; q < taus.size(); ++q) pairs.push_back({taus[p], taus[q]});
        for (auto [t1, t2] : ordered(pairs))
            detail::solve_target(sys, t, make_triple(t1, t2, B::C1), t1, t2, B::C0, B::A1);
    }

    auto leftover = t.entries_with_status(EntryStatus::unknown);
    if (!leftover.empty())
        throw std::logic_error("solve_procedure finished with unknown entry " +
                               triple_name(leftover.front()));
}

// Build a seed for the geometric Sym^3(A_1) table. The degree-0 classical
// values are external input (they are not computable from the closed
// formulas here); the positive-degree parts of the step-(1) entries follow
// from the 2-point theory:
//   a0 insertion: fundamental class, zero in positive degree;
//   a1 insertion: divisor with beta . E1 = -2d at beta = d E1;
//   b0 insertion: the (2)-sector divisor, shifting the extended degree to 1.
inline SeedInput seed_geometric(const std::map<TripleKey, EqScalar>& degree0, int s_order) {
    using B = Sym3Basis;
    const ArSurface& surface = ArSurface::get(1);
    SeedInput input;
    input.s_order = s_order;

    auto zero = TruncatedSeries({"s1"}, {s_order});
    input.gram.assign(B::size, std::vector<TruncatedSeries>(B::size, zero));
    for (int i = 0; i < B::size; ++i)
        for (int j = 0; j < B::size; ++j) {
            EqScalar p = orb_pairing(B::weighted_partition(i), B::weighted_partition(j), surface);
            if (!p.is_zero()) input.gram[i][j].set_coefficient({0}, p);
        }

    const Rational e1_self = surface.chain_label_intersection(1, 1, CohLabel::E(1));
    std::vector<std::string> missing;
    for (int i = 0; i < B::size; ++i) {
        for (int j = i; j < B::size; ++j) {
            for (int k = j; k < B::size; ++k) {
                TripleKey key{i, j, k};
                if (!B::triple_admissible(i, j, k)) continue;
                int insertion = -1;
                for (int idx : {B::A0, B::A1, B::B0}) {
                    for (int pos : key)
                        if (pos == idx) { insertion = idx; break; }
                    if (insertion >= 0) break;
                }
                if (insertion < 0) continue;

                // the two remaining insertions
                std::vector<int> rest;
                bool used = false;
                for (int pos : key) {
                    if (pos == insertion && !used) { used = true; continue; }
                    rest.push_back(pos);
                }
                WeightedPartition wx = B::weighted_partition(rest[0]);
                WeightedPartition wz = B::weighted_partition(rest[1]);

                TruncatedSeries series = zero;
                auto d0 = degree0.find(key);
                if (d0 == degree0.end()) {
                    missing.push_back(triple_name(key));
                    continue;
                }
                if (!d0->second.is_zero()) series.set_coefficient({0}, d0->second);
                for (int d = 1; d <= s_order; ++d) {
                    CurveClass beta{{d}};
                    EqScalar coeff;
                    if (insertion == B::A0) {
                        continue;  // string equation
                    } else if (insertion == B::A1) {
                        coeff = EqScalar(e1_self * d) *
                                two_point_disconnected(wx, wz, 0, beta, 1);
                    } else {
                        coeff = two_point_disconnected(wx, wz, 1, beta, 1);
                    }
                    if (!coeff.is_zero()) series.set_coefficient({d}, coeff);
                }
                input.entries[key] = std::move(series);
            }
        }
    }
    if (!missing.empty()) {
        std::ostringstream msg;
        msg << "seed_geometric: missing required degree-0 values for";
        for (auto& name : missing) msg << " " << name;
        throw seed_error(msg.str());
    }
    return input;
}

struct RelationViolation {
    std::array<int, 4> quadruple;
    int channel_a = 0;
    int channel_b = 0;

    std::string to_string() const {
        const auto& n = Sym3Basis::names();
        std::ostringstream out;
        out << "(" << n[quadruple[0]] << "," << n[quadruple[1]] << "," << n[quadruple[2]] << ","
            << n[quadruple[3]] << ") channels " << channel_a << "/" << channel_b;
        return out.str();
    }
};

// Evaluate every WDVV relation instance over the basis, to the table's
// truncation; empty result means associativity holds.
inline std::vector<RelationViolation> verify_all_relations(const WdvvSystem& sys,
                                                           const ThreePtTable& t) {
    std::vector<RelationViolation> violations;
    for (int a = 0; a < Sym3Basis::size; ++a)
        for (int b = a; b < Sym3Basis::size; ++b)
            for (int c = b; c < Sym3Basis::size; ++c)
                for (int d = c; d < Sym3Basis::size; ++d) {
                    std::array<int, 4> quad{a, b, c, d};
                    for (auto [ca, cb] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
                        Relation rel = wdvv_relation(sys, quad, ca, cb);
                        if (!rel.evaluate(t, sys).is_zero())
                            violations.push_back({quad, ca, cb});
                    }
                }
    return violations;
}

}  // namespace symgw::wdvv
