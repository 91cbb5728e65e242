#pragma once

// The class algebra of S_n: the center of Z[S_n] in the basis of conjugacy
// class sums K_lambda. Multiplying a central element by K_lambda is a linear
// map on class coordinates whose matrix is computed once per (n, lambda) by
// walking one representative per target class against the whole class
// C_lambda. This gives branched-cover counts at polynomial cost in the
// number of classes instead of (n!)^b tuple enumeration.

#include "symgw/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace symgw {

namespace detail {

using Perm = std::vector<int>;  // images, 0-based

inline Perm class_representative(const Partition& lambda) {
    Perm g(lambda.size());
    int base = 0;
    for (int p : lambda.parts()) {
        for (int k = 0; k < p; ++k) g[base + k] = base + (k + 1) % p;
        base += p;
    }
    return g;
}

inline Partition cycle_type(const Perm& g) {
    std::vector<char> seen(g.size(), 0);
    std::vector<int> parts;
    for (size_t i = 0; i < g.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<size_t>(g[j]);
            ++len;
        }
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

}  // namespace detail

class ClassAlgebra {
public:
    explicit ClassAlgebra(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("ClassAlgebra requires n >= 1");
        classes_ = enumerate_partitions(n);
        Integer nfact = factorial(n);
        for (size_t i = 0; i < classes_.size(); ++i) {
            index_[classes_[i]] = static_cast<int>(i);
            class_size_.push_back(nfact / zee(classes_[i]));
        }
        build_transposition_table();
    }

    // Shared, write-once cache by n.
    static const ClassAlgebra& get(int n) {
        static std::mutex mu;
        static std::map<int, ClassAlgebra> cache;
        std::lock_guard<std::mutex> lock(mu);
        return cache.try_emplace(n, n).first->second;
    }

    int n() const { return n_; }
    const std::vector<Partition>& classes() const { return classes_; }
    int index_of(const Partition& lambda) const {
        auto it = index_.find(lambda);
        if (it == index_.end())
            throw std::invalid_argument("not a partition of " + std::to_string(n_) + ": " +
                                        lambda.to_string());
        return it->second;
    }
    const Integer& class_size(int idx) const { return class_size_.at(idx); }

    // Coordinates of K_lambda * K_T^b in the class-sum basis, starting from
    // z = e_lambda.  z[nu] is the coefficient of any single element of C_nu.
    std::vector<Integer> transposition_walk(const Partition& lambda, int steps) const {
        std::vector<Integer> z(classes_.size(), 0);
        z[index_of(lambda)] = 1;
        for (int s = 0; s < steps; ++s) {
            std::vector<Integer> next(classes_.size(), 0);
            for (size_t nu = 0; nu < classes_.size(); ++nu)
                for (size_t mu = 0; mu < classes_.size(); ++mu)
                    if (transposition_table_[nu][mu] != 0 && z[mu] != 0)
                        next[nu] += transposition_table_[nu][mu] * z[mu];
            z = std::move(next);
        }
        return z;
    }

    // z * K_rho in class coordinates.
    std::vector<Integer> multiply_by_class(const std::vector<Integer>& z,
                                           const Partition& rho) const {
        const auto& table = class_table(rho);
        std::vector<Integer> next(classes_.size(), 0);
        for (size_t nu = 0; nu < classes_.size(); ++nu)
            for (size_t mu = 0; mu < classes_.size(); ++mu)
                if (table[nu][mu] != 0 && z[mu] != 0) next[nu] += table[nu][mu] * z[mu];
        return next;
    }

    // Does the identity occur in C_l1 * C_l2 * C_l3?
    bool identity_in_triple_product(const Partition& l1, const Partition& l2,
                                    const Partition& l3) const {
        std::vector<Integer> z(classes_.size(), 0);
        z[index_of(l1)] = 1;
        z = multiply_by_class(z, l2);
        // classes of S_n are closed under inversion, so the coefficient of
        // the identity in K_nu * K_l3 is nonzero iff nu == l3
        return z[index_of(l3)] != 0;
    }

private:
    void build_transposition_table() {
        size_t m = classes_.size();
        transposition_table_.assign(m, std::vector<Integer>(m, 0));
        if (n_ < 2) return;
        for (size_t nu = 0; nu < m; ++nu) {
            detail::Perm rep = detail::class_representative(classes_[nu]);
            for (int a = 0; a < n_; ++a) {
                for (int b = a + 1; b < n_; ++b) {
                    // g_nu * (a b): first swap, then apply rep
                    detail::Perm prod = rep;
                    std::swap(prod[a], prod[b]);
                    int mu = index_of(detail::cycle_type(prod));
                    // #{tau : g_nu * tau in C_mu} feeds coefficient of
                    // elements of C_nu in K_mu * K_T
                    transposition_table_[nu][static_cast<size_t>(mu)] += 1;
                }
            }
        }
    }

    const std::vector<std::vector<Integer>>& class_table(const Partition& rho) const {
        std::lock_guard<std::mutex> lock(class_table_mutex_);
        auto it = class_tables_.find(rho);
        if (it != class_tables_.end()) return it->second;

        size_t m = classes_.size();
        std::vector<std::vector<Integer>> table(m, std::vector<Integer>(m, 0));
        // enumerate C_rho once
        std::vector<detail::Perm> members;
        detail::Perm p(n_);
        std::iota(p.begin(), p.end(), 0);
        do {
            if (detail::cycle_type(p) == rho) members.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));

        for (size_t nu = 0; nu < m; ++nu) {
            detail::Perm rep = detail::class_representative(classes_[nu]);
            for (const auto& y : members) {
                // g_nu * y^{-1}
                detail::Perm yinv(n_);
                for (int i = 0; i < n_; ++i) yinv[y[i]] = i;
                detail::Perm prod(n_);
                for (int i = 0; i < n_; ++i) prod[i] = rep[yinv[i]];
                int mu = index_of(detail::cycle_type(prod));
                table[nu][static_cast<size_t>(mu)] += 1;
            }
        }
        return class_tables_.emplace(rho, std::move(table)).first->second;
    }

    int n_;
    std::vector<Partition> classes_;
    std::map<Partition, int> index_;
    std::vector<Integer> class_size_;
    // transposition_table_[nu][mu] = #{transpositions tau : rep(nu) * tau in C_mu}
    std::vector<std::vector<Integer>> transposition_table_;
    mutable std::mutex class_table_mutex_;
    mutable std::map<Partition, std::vector<std::vector<Integer>>> class_tables_;
};

}  // namespace symgw
