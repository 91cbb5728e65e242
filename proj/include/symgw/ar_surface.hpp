#pragma once

// Equivariant geometry of the A_r resolution.
//
// Fixed points x_1..x_{r+1} carry tangent weights
//   (L_i, R_i) = ((r-i+2) t1 + (1-i) t2, (-r+i-1) t1 + i t2),
// so L_i + R_i = t1 + t2 and R_i = -L_{i+1}. Divisor classes are stored as
// localization vectors (their restrictions to the fixed points); every
// integral is an Atiyah-Bott sum over the r+1 fixed points. The sign
// convention for the restrictions of E_k is pinned by requiring the
// localization sums to reproduce minus the Cartan matrix.

#include "symgw/partition.hpp"
#include "symgw/scalar.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace symgw {

// beta = sum_k d_k E_k in the E-basis; by duality d_k = beta . omega_k.
struct CurveClass {
    std::vector<int> d;

    int rank() const { return static_cast<int>(d.size()); }
    bool is_zero() const {
        for (int v : d)
            if (v != 0) return false;
        return true;
    }
    bool is_effective() const {
        for (int v : d)
            if (v < 0) return false;
        return true;
    }

    std::string to_string() const {
        std::ostringstream out;
        for (size_t i = 0; i < d.size(); ++i) {
            if (i) out << ",";
            out << d[i];
        }
        return out.str();
    }
    static CurveClass parse(const std::string& text, int r) {
        CurveClass beta;
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) beta.d.push_back(std::stoi(tok));
        if (beta.rank() != r)
            throw std::invalid_argument("curve class has " + std::to_string(beta.rank()) +
                                        " coefficients, expected " + std::to_string(r));
        return beta;
    }
};

struct ChainDecomposition {
    int d = 0;  // multiplicity
    int i = 0;  // chain start (1-based)
    int j = 0;  // chain end
};

// beta = d * (E_i + ... + E_j) iff the support is a contiguous interval
// with constant coefficient.
inline std::optional<ChainDecomposition> chain_decompose(const CurveClass& beta) {
    if (beta.is_zero()) throw std::invalid_argument("chain_decompose: zero curve class");
    if (!beta.is_effective()) throw std::invalid_argument("chain_decompose: class not effective");
    int first = -1, last = -1;
    for (int k = 0; k < beta.rank(); ++k) {
        if (beta.d[k] != 0) {
            if (first < 0) first = k;
            last = k;
        }
    }
    int d = beta.d[first];
    for (int k = first; k <= last; ++k)
        if (beta.d[k] != d) return std::nullopt;
    return ChainDecomposition{d, first + 1, last + 1};
}

// Localization vector: restriction to each fixed point, plus E-basis
// coordinates when the class is known in that basis.
struct DivisorClass {
    std::vector<EqScalar> at_fixed;  // length r+1
    std::optional<std::vector<Rational>> e_coords;
};

class ArSurface {
public:
    explicit ArSurface(int r) : r_(r) {
        if (r < 1) throw std::invalid_argument("ArSurface requires r >= 1");
        for (int i = 1; i <= r + 1; ++i) {
            Poly L, R;
            L.add_term({1, 0}, Rational(r - i + 2));
            L.add_term({0, 1}, Rational(1 - i));
            R.add_term({1, 0}, Rational(-r + i - 1));
            R.add_term({0, 1}, Rational(i));
            L_.push_back(L);
            R_.push_back(R);
            euler_.push_back(L * R);
        }
    }

    // Shared immutable instance per r.
    static const ArSurface& get(int r) {
        static std::mutex mu;
        static std::map<int, ArSurface> cache;
        std::lock_guard<std::mutex> lock(mu);
        return cache.try_emplace(r, r).first->second;
    }

    int r() const { return r_; }

    // tangent weights at x_i, 1-based
    const Poly& L(int i) const { return L_.at(check_point(i) - 1); }
    const Poly& R(int i) const { return R_.at(check_point(i) - 1); }
    const Poly& euler(int i) const { return euler_.at(check_point(i) - 1); }

    // minus the Cartan matrix of A_r
    static int intersection_entry(int k, int l) {
        if (k == l) return -2;
        if (k == l + 1 || l == k + 1) return 1;
        return 0;
    }

    DivisorClass one_class() const {
        DivisorClass c;
        c.at_fixed.assign(r_ + 1, EqScalar(Rational(1)));
        return c;
    }

    DivisorClass fixed_point_class(int i) const {
        check_point(i);
        DivisorClass c;
        c.at_fixed.assign(r_ + 1, EqScalar());
        c.at_fixed[i - 1] = EqScalar(euler_[i - 1]);
        return c;
    }

    // E_k restricts to L_k at x_k and R_{k+1} at x_{k+1}, zero elsewhere.
    DivisorClass exceptional_class(int k) const {
        check_curve(k);
        DivisorClass c;
        c.at_fixed.assign(r_ + 1, EqScalar());
        c.at_fixed[k - 1] = EqScalar(L_[k - 1]);
        c.at_fixed[k] = EqScalar(R_[k]);
        std::vector<Rational> coords(r_, Rational(0));
        coords[k - 1] = 1;
        c.e_coords = std::move(coords);
        return c;
    }

    // omega_k: the divisor with integral(omega_k . E_i) = delta_{ki},
    // solved from the minus-Cartan system with exact rational coordinates.
    DivisorClass omega_class(int k) const {
        check_curve(k);
        const auto& coords = omega_coordinates(k);
        DivisorClass c;
        c.at_fixed.assign(r_ + 1, EqScalar());
        for (int m = 1; m <= r_; ++m) {
            if (coords[m - 1] == 0) continue;
            DivisorClass e = exceptional_class(m);
            for (int i = 0; i <= r_; ++i)
                c.at_fixed[i] += EqScalar(coords[m - 1]) * e.at_fixed[i];
        }
        c.e_coords = coords;
        return c;
    }

    DivisorClass label_class(const CohLabel& l) const {
        switch (l.kind) {
            case CohLabel::Kind::one: return one_class();
            case CohLabel::Kind::exceptional: return exceptional_class(l.index);
            case CohLabel::Kind::omega: return omega_class(l.index);
            case CohLabel::Kind::fixed: return fixed_point_class(l.index);
        }
        throw std::logic_error("unknown label kind");
    }

    // Atiyah-Bott: sum_i prod_c c|_{x_i} / (L_i R_i).
    EqScalar equivariant_integral(std::span<const DivisorClass> classes) const {
        EqScalar total;
        for (int i = 0; i <= r_; ++i) {
            EqScalar prod(Rational(1));
            bool zero = false;
            for (const auto& c : classes) {
                if (c.at_fixed.at(i).is_zero()) {
                    zero = true;
                    break;
                }
                prod *= c.at_fixed[i];
            }
            if (zero) continue;
            total += prod / EqScalar(euler_[i]);
        }
        return total;
    }
    EqScalar equivariant_integral(const DivisorClass& a, const DivisorClass& b) const {
        DivisorClass cs[2] = {a, b};
        return equivariant_integral(std::span<const DivisorClass>(cs, 2));
    }

    // Intersection number of the chain curve class E_i + ... + E_j with a
    // divisor; the localization sum must collapse to a rational constant.
    Rational chain_intersection(int i, int j, const DivisorClass& gamma) const {
        check_curve(i);
        check_curve(j);
        if (i > j) throw std::invalid_argument("chain_intersection: i > j");
        EqScalar total;
        for (int k = i; k <= j; ++k)
            total += equivariant_integral(exceptional_class(k), gamma);
        return total.constant_value();
    }

    // Memoized chain_intersection for atomic labels; this sits on the hot
    // path of the corollary evaluator.
    Rational chain_label_intersection(int i, int j, const CohLabel& l) const {
        std::lock_guard<std::mutex> lock(chain_cache_mutex_);
        auto key = std::make_tuple(i, j, l);
        auto it = chain_cache_.find(key);
        if (it == chain_cache_.end())
            it = chain_cache_.emplace(key, chain_intersection(i, j, label_class(l))).first;
        return it->second;
    }

    // Expansion of an atomic label over fixed-point classes:
    // gamma = sum_i (gamma|_{x_i} / (L_i R_i)) [x_i].
    std::vector<std::pair<int, EqScalar>> label_to_fixed_basis(const CohLabel& l) const {
        if (l.kind == CohLabel::Kind::fixed) return {{l.index, EqScalar(Rational(1))}};
        DivisorClass c = label_class(l);
        std::vector<std::pair<int, EqScalar>> out;
        for (int i = 1; i <= r_ + 1; ++i) {
            if (c.at_fixed[i - 1].is_zero()) continue;
            out.push_back({i, c.at_fixed[i - 1] / EqScalar(euler_[i - 1])});
        }
        return out;
    }

    const std::vector<Rational>& omega_coordinates(int k) const {
        check_curve(k);
        std::lock_guard<std::mutex> lock(omega_mutex_);
        if (omega_cache_.empty()) {
            omega_cache_.resize(r_);
            for (int kk = 1; kk <= r_; ++kk) omega_cache_[kk - 1] = solve_omega(kk);
        }
        return omega_cache_[k - 1];
    }

private:
    int check_point(int i) const {
        if (i < 1 || i > r_ + 1)
            throw std::out_of_range("fixed point index out of range: " + std::to_string(i));
        return i;
    }
    int check_curve(int k) const {
        if (k < 1 || k > r_)
            throw std::out_of_range("exceptional curve index out of range: " + std::to_string(k));
        return k;
    }

    // Solve C x = e_k over Q for C = minus Cartan (nondegenerate).
    std::vector<Rational> solve_omega(int k) const {
        int m = r_;
        std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(m + 1, Rational(0)));
        for (int a = 0; a < m; ++a) {
            for (int b = 0; b < m; ++b) aug[a][b] = intersection_entry(a + 1, b + 1);
            aug[a][m] = (a == k - 1) ? 1 : 0;
        }
        for (int col = 0; col < m; ++col) {
            int pivot = -1;
            for (int row = col; row < m; ++row)
                if (aug[row][col] != 0) { pivot = row; break; }
            if (pivot < 0) throw std::logic_error("Cartan matrix unexpectedly singular");
            std::swap(aug[col], aug[pivot]);
            Rational inv = Rational(1) / aug[col][col];
            for (int b = col; b <= m; ++b) aug[col][b] *= inv;
            for (int row = 0; row < m; ++row) {
                if (row == col || aug[row][col] == 0) continue;
                Rational f = aug[row][col];
                for (int b = col; b <= m; ++b) aug[row][b] -= f * aug[col][b];
            }
        }
        std::vector<Rational> x(m);
        for (int a = 0; a < m; ++a) x[a] = aug[a][m];
        return x;
    }

    int r_;
    std::vector<Poly> L_, R_, euler_;
    mutable std::mutex omega_mutex_;
    mutable std::vector<std::vector<Rational>> omega_cache_;
    mutable std::mutex chain_cache_mutex_;
    mutable std::map<std::tuple<int, int, CohLabel>, Rational> chain_cache_;
};

}  // namespace symgw
