#pragma once

// The orbifold cohomology basis of [Sym^n(A_r)]: classes are EqScalar-linear
// combinations of cohomology-weighted partitions of n. Sectors are indexed
// by the underlying partition; the Poincare pairing is block-diagonal across
// sectors and is evaluated by localization:
//
//   <lambda(eta), lambda(xi)> = (1/z(lambda)) sum_{size-preserving bijections m}
//                               prod_k  integral( eta_k . xi_{m(k)} )
//
// The 1/z normalization reduces to a plain surface integral at n = 1, and
// every downstream use is invariant under per-sector rescaling of the
// pairing.

#include "symgw/ar_surface.hpp"
#include "symgw/class_algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <vector>

namespace symgw {

struct OrbClass {
    int n = 0;
    std::map<WeightedPartition, EqScalar> terms;

    OrbClass() = default;
    explicit OrbClass(int n_) : n(n_) {}
    OrbClass(const WeightedPartition& w, const EqScalar& c = EqScalar(Rational(1))) : n(w.size()) {
        if (!c.is_zero()) terms[w] = c;
    }

    void add(const WeightedPartition& w, const EqScalar& c) {
        if (w.size() != n) throw std::invalid_argument("OrbClass: mixed symmetric product sizes");
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    OrbClass& operator+=(const OrbClass& o) {
        if (o.terms.empty()) return *this;
        if (n == 0) n = o.n;
        for (auto& [w, c] : o.terms) add(w, c);
        return *this;
    }
    OrbClass& operator*=(const EqScalar& c) {
        if (c.is_zero()) {
            terms.clear();
            return *this;
        }
        for (auto& [w, v] : terms) v *= c;
        return *this;
    }
    friend OrbClass operator*(OrbClass x, const EqScalar& c) { return x *= c; }

    friend bool operator==(const OrbClass&, const OrbClass&) = default;
};

// Pairing of two basis elements. Zero unless the underlying partitions agree.
inline EqScalar orb_pairing(const WeightedPartition& w1, const WeightedPartition& w2,
                            const ArSurface& surface) {
    if (w1.size() != w2.size())
        throw std::invalid_argument("orb_pairing: size mismatch");
    if (w1.shape() != w2.shape()) return EqScalar();

    // group entries of both sides by part size
    std::map<int, std::vector<CohLabel>> left, right;
    for (auto& [p, l] : w1.entries()) left[p].push_back(l);
    for (auto& [p, l] : w2.entries()) right[p].push_back(l);

    // cache surface integrals of label pairs
    auto pair_integral = [&](const CohLabel& a, const CohLabel& b) {
        return surface.equivariant_integral(surface.label_class(a), surface.label_class(b));
    };

    EqScalar total(Rational(1));
    for (auto& [part, ls] : left) {
        auto& rs = right[part];
        // sum over bijections of this size group
        std::vector<size_t> perm(ls.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        EqScalar group_sum;
        do {
            EqScalar prod(Rational(1));
            bool zero = false;
            for (size_t i = 0; i < ls.size(); ++i) {
                EqScalar v = pair_integral(ls[i], rs[perm[i]]);
                if (v.is_zero()) {
                    zero = true;
                    break;
                }
                prod *= v;
            }
            if (!zero) group_sum += prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (group_sum.is_zero()) return EqScalar();
        total *= group_sum;
    }
    Rational zinv(1, 1);
    zinv /= Rational(zee(w1.shape()));
    return total * EqScalar(zinv);
}

inline EqScalar orb_pairing(const OrbClass& c1, const OrbClass& c2, const ArSurface& surface) {
    if (c1.n != c2.n && !c1.terms.empty() && !c2.terms.empty())
        throw std::invalid_argument("orb_pairing: size mismatch");
    EqScalar total;
    for (auto& [w1, a] : c1.terms)
        for (auto& [w2, b] : c2.terms) {
            if (w1.shape() != w2.shape()) continue;
            total += a * b * orb_pairing(w1, w2, surface);
        }
    return total;
}

// Expand every label over fixed-point classes; idempotent.
inline OrbClass to_fixed_point_basis(const OrbClass& c, const ArSurface& surface) {
    OrbClass out(c.n);
    for (auto& [w, coeff] : c.terms) {
        // multilinear expansion over the parts
        std::vector<std::pair<WeightedPartition, EqScalar>> expanded = {{w, coeff}};
        for (size_t slot = 0; slot < w.entries().size(); ++slot) {
            std::vector<std::pair<WeightedPartition, EqScalar>> next;
            for (auto& [wp, cc] : expanded) {
                const CohLabel& l = wp.entries()[slot].second;
                for (auto& [i, weight] : surface.label_to_fixed_basis(l))
                    next.push_back({wp.with_label(slot, CohLabel::fixed(i)), cc * weight});
            }
            expanded = std::move(next);
        }
        for (auto& [wp, cc] : expanded) out.add(wp, cc);
    }
    return out;
}

// The basis of the sector lambda: parts labeled with 1, E_1, ..., E_r, one
// representative per labeled multiset, in canonical order.
inline std::vector<WeightedPartition> sector_basis(const Partition& lambda, int r) {
    std::vector<CohLabel> atoms;
    atoms.push_back(CohLabel::one());
    for (int k = 1; k <= r; ++k) atoms.push_back(CohLabel::E(k));

    std::set<WeightedPartition> seen;
    std::vector<WeightedPartition> out;
    std::vector<size_t> choice(lambda.length(), 0);
    while (true) {
        std::vector<WeightedPartition::Entry> entries;
        for (int i = 0; i < lambda.length(); ++i)
            entries.push_back({lambda.parts()[i], atoms[choice[i]]});
        WeightedPartition w(std::move(entries));
        if (seen.insert(w).second) out.push_back(w);
        size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (choice[i] + 1 < atoms.size()) { ++choice[i]; break; }
            choice[i] = 0;
        }
        if (i == choice.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All sectors of fixed n, partitions in enumeration order.
inline std::vector<WeightedPartition> full_basis(int n, int r) {
    std::vector<WeightedPartition> out;
    for (const auto& lambda : enumerate_partitions(n))
        for (auto& w : sector_basis(lambda, r)) out.push_back(w);
    return out;
}

namespace detail {

struct SectorGram {
    std::vector<WeightedPartition> basis;
    std::vector<std::vector<EqScalar>> inverse;  // inverse Gram over Q(t1,t2)
};

// Exact inverse of the sector Gram matrix; throws if singular.
inline SectorGram build_sector_gram(const Partition& lambda, const ArSurface& surface) {
    SectorGram sg;
    sg.basis = sector_basis(lambda, surface.r());
    size_t m = sg.basis.size();
    std::vector<std::vector<EqScalar>> aug(m, std::vector<EqScalar>(2 * m));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j)
            aug[i][j] = orb_pairing(sg.basis[i], sg.basis[j], surface);
        aug[i][m + i] = EqScalar(Rational(1));
    }
    for (size_t col = 0; col < m; ++col) {
        size_t pivot = m;
        for (size_t row = col; row < m; ++row)
            if (!aug[row][col].is_zero()) { pivot = row; break; }
        if (pivot == m)
            throw std::domain_error("singular Gram matrix in sector " + lambda.to_string());
        std::swap(aug[col], aug[pivot]);
        EqScalar inv = EqScalar(Rational(1)) / aug[col][col];
        for (size_t b = 0; b < 2 * m; ++b) aug[col][b] *= inv;
        for (size_t row = 0; row < m; ++row) {
            if (row == col || aug[row][col].is_zero()) continue;
            EqScalar f = aug[row][col];
            for (size_t b = 0; b < 2 * m; ++b) aug[row][b] -= f * aug[col][b];
        }
    }
    sg.inverse.assign(m, std::vector<EqScalar>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) sg.inverse[i][j] = aug[i][m + j];
    return sg;
}

inline const SectorGram& sector_gram(const Partition& lambda, const ArSurface& surface) {
    static std::mutex mu;
    static std::map<std::pair<int, Partition>, SectorGram> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(surface.r(), lambda);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_sector_gram(lambda, surface)).first;
    return it->second;
}

}  // namespace detail

// The unique class in the sector span with <dual, v> = delta_{w,v}.
inline OrbClass dual_class(const WeightedPartition& w, const ArSurface& surface) {
    const auto& sg = detail::sector_gram(w.shape(), surface);
    size_t idx = sg.basis.size();
    for (size_t i = 0; i < sg.basis.size(); ++i)
        if (sg.basis[i] == w) { idx = i; break; }
    if (idx == sg.basis.size())
        throw std::invalid_argument("dual_class: not a sector basis element: " + w.to_string());
    OrbClass dual(w.size());
    for (size_t j = 0; j < sg.basis.size(); ++j)
        dual.add(sg.basis[j], sg.inverse[j][idx]);
    return dual;
}

// dim [M-bar] = n dim(X) + k - 3 - sum age(sigma_i)
inline int virtual_dimension(const std::vector<Partition>& sectors, int k, int n, int dim_x = 2) {
    if (static_cast<int>(sectors.size()) != k)
        throw std::invalid_argument("virtual_dimension: k != #sectors");
    int dim = n * dim_x + k - 3;
    for (const auto& s : sectors) dim -= age(s, n);
    return dim;
}

// Is the identity in C_{l1} C_{l2} C_{l3}?  Decided in the class algebra.
inline bool monodromy_admissible(const Partition& l1, const Partition& l2, const Partition& l3) {
    int n = l1.size();
    if (l2.size() != n || l3.size() != n)
        throw std::invalid_argument("monodromy_admissible: mixed partition sizes");
    return ClassAlgebra::get(n).identity_in_triple_product(l1, l2, l3);
}

}  // namespace symgw
