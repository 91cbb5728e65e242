#pragma once

// Integer partitions and cohomology-weighted partitions.
//
// A weighted partition is an unordered multiset of (part, label) pairs; the
// canonical storage order is part descending, then label ascending, which
// makes multiset equality and serialization deterministic.

#include "symgw/rational.hpp"

#include <algorithm>
#include <compare>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symgw {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { canonicalize(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { canonicalize(); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const {
        int n = 0;
        for (int p : parts_) n += p;
        return n;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
        return x.parts_ <=> y.parts_;
    }

    std::string to_string() const {
        std::ostringstream out;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) out << ",";
            out << parts_[i];
        }
        return out.str();
    }

    // "2,1" -> (2,1)
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("bad partition literal: " + text);
            parts.push_back(std::stoi(tok));
        }
        if (parts.empty()) throw std::invalid_argument("empty partition literal");
        return Partition(std::move(parts));
    }

private:
    void canonicalize() {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("partition parts must be positive");
        std::sort(parts_.rbegin(), parts_.rend());
    }

    std::vector<int> parts_;
};

// All partitions of n, first-part descending: (n), ..., (1^n).
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_partitions requires n >= 1");
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline Integer aut_order(const Partition& lambda) {
    Integer a = 1;
    const auto& ps = lambda.parts();
    size_t i = 0;
    while (i < ps.size()) {
        size_t j = i;
        while (j < ps.size() && ps[j] == ps[i]) ++j;
        a *= factorial(static_cast<long>(j - i));
        i = j;
    }
    return a;
}

// z(lambda) = prod(parts) * |Aut(lambda)|; |C_lambda| = n!/z(lambda).
inline Integer zee(const Partition& lambda) {
    Integer z = aut_order(lambda);
    for (int p : lambda.parts()) z *= p;
    return z;
}

inline int age(const Partition& lambda, int n) {
    if (lambda.size() != n)
        throw std::invalid_argument("age: partition size does not match n");
    return n - lambda.length();
}

// --- cohomology labels -------------------------------------------------------

struct CohLabel {
    enum class Kind { one, exceptional, omega, fixed };

    Kind kind = Kind::one;
    int index = 0;  // E_k / omega_k: 1..r; x_i: 1..r+1; unused for "1"

    static CohLabel one() { return {Kind::one, 0}; }
    static CohLabel E(int k) { return {Kind::exceptional, k}; }
    static CohLabel omega(int k) { return {Kind::omega, k}; }
    static CohLabel fixed(int i) { return {Kind::fixed, i}; }

    friend bool operator==(const CohLabel&, const CohLabel&) = default;
    friend std::strong_ordering operator<=>(const CohLabel&, const CohLabel&) = default;

    std::string to_string() const {
        switch (kind) {
            case Kind::one: return "1";
            case Kind::exceptional: return "E" + std::to_string(index);
            case Kind::omega: return "w" + std::to_string(index);
            case Kind::fixed: return "x" + std::to_string(index);
        }
        return "?";
    }

    static CohLabel parse(const std::string& s) {
        if (s == "1") return one();
        if (s.size() >= 2 && (s[0] == 'E' || s[0] == 'w' || s[0] == 'x')) {
            int idx = std::stoi(s.substr(1));
            if (idx < 1) throw std::invalid_argument("bad label index: " + s);
            if (s[0] == 'E') return E(idx);
            if (s[0] == 'w') return omega(idx);
            return fixed(idx);
        }
        throw std::invalid_argument("bad cohomology label: " + s);
    }
};

class WeightedPartition {
public:
    using Entry = std::pair<int, CohLabel>;  // (part, label)

    WeightedPartition() = default;
    explicit WeightedPartition(std::vector<Entry> entries) : entries_(std::move(entries)) {
        canonicalize();
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    int length() const { return static_cast<int>(entries_.size()); }
    int size() const {
        int n = 0;
        for (auto& [p, l] : entries_) n += p;
        return n;
    }

    Partition shape() const {
        std::vector<int> parts;
        parts.reserve(entries_.size());
        for (auto& [p, l] : entries_) parts.push_back(p);
        return Partition(std::move(parts));
    }

    std::vector<CohLabel> labels() const {
        std::vector<CohLabel> ls;
        ls.reserve(entries_.size());
        for (auto& [p, l] : entries_) ls.push_back(l);
        return ls;
    }

    WeightedPartition with_label(size_t slot, CohLabel l) const {
        auto es = entries_;
        es.at(slot).second = l;
        return WeightedPartition(std::move(es));
    }

    friend bool operator==(const WeightedPartition&, const WeightedPartition&) = default;
    friend std::strong_ordering operator<=>(const WeightedPartition& x, const WeightedPartition& y) {
        return x.entries_ <=> y.entries_;
    }

    // "2(E1),1(1)"
    std::string to_string() const {
        std::ostringstream out;
        for (size_t i = 0; i < entries_.size(); ++i) {
            if (i) out << ",";
            out << entries_[i].first << "(" << entries_[i].second.to_string() << ")";
        }
        return out.str();
    }

    static WeightedPartition parse(const std::string& text) {
        std::vector<Entry> entries;
        size_t i = 0;
        while (i < text.size()) {
            size_t open = text.find('(', i);
            size_t close = text.find(')', i);
            if (open == std::string::npos || close == std::string::npos || close < open)
                throw std::invalid_argument("bad weighted partition literal: " + text);
            int part = std::stoi(text.substr(i, open - i));
            if (part < 1) throw std::invalid_argument("parts must be positive: " + text);
            CohLabel label = CohLabel::parse(text.substr(open + 1, close - open - 1));
            entries.push_back({part, label});
            i = close + 1;
            if (i < text.size()) {
                if (text[i] != ',') throw std::invalid_argument("expected ',' in: " + text);
                ++i;
            }
        }
        if (entries.empty()) throw std::invalid_argument("empty weighted partition literal");
        return WeightedPartition(std::move(entries));
    }

private:
    void canonicalize() {
        for (auto& [p, l] : entries_)
            if (p < 1) throw std::invalid_argument("parts must be positive");
        std::sort(entries_.begin(), entries_.end(), [](const Entry& x, const Entry& y) {
            if (x.first != y.first) return x.first > y.first;
            return x.second < y.second;
        });
    }

    std::vector<Entry> entries_;
};

// Symmetries preserving both part and label.
inline Integer aut_order_weighted(const WeightedPartition& w) {
    Integer a = 1;
    const auto& es = w.entries();
    size_t i = 0;
    while (i < es.size()) {
        size_t j = i;
        while (j < es.size() && es[j] == es[i]) ++j;
        a *= factorial(static_cast<long>(j - i));
        i = j;
    }
    return a;
}

// [mu(gamma)] = |Aut(mu)| / |Aut(mu(gamma))|
inline Rational bracket_factor(const WeightedPartition& w) {
    Rational q(aut_order(w.shape()), aut_order_weighted(w));
    q.canonicalize();
    return q;
}

// All ways to write w as a disjoint union (sigma, mu) of labeled
// sub-multisets with mu nonempty; sigma may be empty. Each distinct split
// appears exactly once, in deterministic odometer order over the counts of
// the distinct (part, label) entries.
inline std::vector<std::pair<WeightedPartition, WeightedPartition>> splittings(
    const WeightedPartition& w) {
    // group identical entries
    std::vector<WeightedPartition::Entry> distinct;
    std::vector<int> mult;
    for (auto& e : w.entries()) {
        if (!distinct.empty() && distinct.back() == e) ++mult.back();
        else {
            distinct.push_back(e);
            mult.push_back(1);
        }
    }
    std::vector<std::pair<WeightedPartition, WeightedPartition>> out;
    std::vector<int> take(distinct.size(), 0);  // how many of each go to sigma
    while (true) {
        std::vector<WeightedPartition::Entry> sigma, mu;
        for (size_t i = 0; i < distinct.size(); ++i) {
            for (int k = 0; k < take[i]; ++k) sigma.push_back(distinct[i]);
            for (int k = take[i]; k < mult[i]; ++k) mu.push_back(distinct[i]);
        }
        if (!mu.empty())
            out.push_back({WeightedPartition(std::move(sigma)), WeightedPartition(std::move(mu))});
        size_t i = 0;
        for (; i < take.size(); ++i) {
            if (take[i] < mult[i]) { ++take[i]; break; }
            take[i] = 0;
        }
        if (i == take.size()) break;
    }
    return out;
}

}  // namespace symgw
