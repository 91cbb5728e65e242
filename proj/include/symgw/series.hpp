#pragma once

// Truncated formal power series over EqScalar.
//
// The variable set and per-variable truncation orders are explicit; asking
// for a coefficient beyond the truncation is an error, never a silent zero.
// Instances: the GJV auxiliary series in t, the 3-point generating function
// in u, s1..sr, and the WDVV tables in s1.

#include "symgw/scalar.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace symgw {

class truncation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TruncatedSeries {
public:
    using Exponents = std::vector<int>;

    TruncatedSeries() = default;
    TruncatedSeries(std::vector<std::string> vars, std::vector<int> orders)
        : vars_(std::move(vars)), orders_(std::move(orders)) {
        if (vars_.size() != orders_.size())
            throw std::invalid_argument("variable/order count mismatch");
        for (int o : orders_)
            if (o < 0) throw std::invalid_argument("negative truncation order");
    }

    static TruncatedSeries constant(std::vector<std::string> vars, std::vector<int> orders,
                                    const EqScalar& c) {
        TruncatedSeries s(std::move(vars), std::move(orders));
        s.set_coefficient(Exponents(s.vars_.size(), 0), c);
        return s;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<int>& orders() const { return orders_; }
    const std::map<Exponents, EqScalar>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    bool within_truncation(const Exponents& e) const {
        if (e.size() != orders_.size()) return false;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 || e[i] > orders_[i]) return false;
        return true;
    }

    void set_coefficient(const Exponents& e, const EqScalar& c) {
        if (!within_truncation(e)) throw truncation_error("exponent outside truncation");
        if (c.is_zero()) coeffs_.erase(e);
        else coeffs_[e] = c;
    }

    const EqScalar& coefficient(const Exponents& e) const {
        if (e.size() != orders_.size())
            throw truncation_error("exponent arity mismatch");
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 || e[i] > orders_[i])
                throw truncation_error("coefficient query beyond truncation order");
        static const EqScalar zero;
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? zero : it->second;
    }

    EqScalar constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_compatible(o);
        for (auto& [e, c] : o.coeffs_) {
            auto it = coeffs_.find(e);
            if (it == coeffs_.end()) coeffs_[e] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) coeffs_.erase(it);
            }
        }
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this += -o; }
    friend TruncatedSeries operator+(TruncatedSeries x, const TruncatedSeries& y) { return x += y; }
    friend TruncatedSeries operator-(TruncatedSeries x, const TruncatedSeries& y) { return x -= y; }

    TruncatedSeries operator-() const {
        TruncatedSeries r(vars_, orders_);
        for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
        x.require_compatible(y);
        TruncatedSeries r(x.vars_, x.orders_);
        for (auto& [ex, cx] : x.coeffs_) {
            for (auto& [ey, cy] : y.coeffs_) {
                Exponents e(ex.size());
                bool keep = true;
                for (size_t i = 0; i < e.size(); ++i) {
                    e[i] = ex[i] + ey[i];
                    if (e[i] > x.orders_[i]) { keep = false; break; }
                }
                if (!keep) continue;
                auto it = r.coeffs_.find(e);
                if (it == r.coeffs_.end()) r.coeffs_[e] = cx * cy;
                else {
                    it->second += cx * cy;
                    if (it->second.is_zero()) r.coeffs_.erase(it);
                }
            }
        }
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    TruncatedSeries& operator*=(const EqScalar& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [e, v] : coeffs_) v *= c;
        return *this;
    }
    friend TruncatedSeries operator*(TruncatedSeries s, const EqScalar& c) { return s *= c; }
    friend TruncatedSeries operator*(const EqScalar& c, TruncatedSeries s) { return s *= c; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    // Multiplicative inverse up to truncation; the constant term must be a
    // nonzero scalar. Order-by-order: b_e = -(1/a_0) * sum_{0<f<=e} a_f b_{e-f}.
    TruncatedSeries inverse() const {
        EqScalar a0 = constant_term();
        if (a0.is_zero())
            throw std::domain_error("series inversion requires invertible constant term");
        EqScalar inv0 = EqScalar(Rational(1)) / a0;
        TruncatedSeries r(vars_, orders_);
        Exponents e(vars_.size(), 0);
        // iterate all exponent tuples within truncation in odometer order
        while (true) {
            bool is_origin = true;
            for (int v : e)
                if (v != 0) { is_origin = false; break; }
            if (is_origin) {
                r.coeffs_[e] = inv0;
            } else {
                EqScalar acc;
                for (auto& [f, af] : coeffs_) {
                    bool le = true, nonzero = false;
                    Exponents rem(e.size());
                    for (size_t i = 0; i < e.size(); ++i) {
                        if (f[i] > e[i]) { le = false; break; }
                        if (f[i] != 0) nonzero = true;
                        rem[i] = e[i] - f[i];
                    }
                    if (!le || !nonzero) continue;
                    auto it = r.coeffs_.find(rem);
                    if (it != r.coeffs_.end()) acc += af * it->second;
                }
                if (!acc.is_zero()) r.coeffs_[e] = -(inv0 * acc);
            }
            // odometer increment
            size_t i = 0;
            for (; i < e.size(); ++i) {
                if (e[i] < orders_[i]) { ++e[i]; break; }
                e[i] = 0;
            }
            if (i == e.size()) break;
        }
        return r;
    }

private:
    void require_compatible(const TruncatedSeries& o) const {
        if (vars_ != o.vars_ || orders_ != o.orders_)
            throw std::invalid_argument("series variable set or truncation mismatch");
    }

    std::vector<std::string> vars_;
    std::vector<int> orders_;
    std::map<Exponents, EqScalar> coeffs_;
};

}  // namespace symgw
