#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "orbitatlas/partitions.hpp"
#include "orbitatlas/rational.hpp"

namespace orbitatlas {

// Row bumping: x replaces the leftmost entry strictly bigger than x; the
// displaced entry is inserted into the next row.
struct Tableau {
    std::vector<std::vector<Rational>> rows;

    void insert(const Rational& x) {
        Rational cur = x;
        for (auto& row : rows) {
            auto it = std::upper_bound(row.begin(), row.end(), cur);
            if (it == row.end()) {
                row.push_back(cur);
                return;
            }
            std::swap(cur, *it);
        }
        rows.push_back({cur});
    }

    Partition shape() const {
        Partition p;
        for (const auto& row : rows) p.push_back((int)row.size());
        return p;
    }
};

inline Partition rs_shape(const std::vector<Rational>& x) {
    Tableau t;
    for (const auto& v : x) t.insert(v);
    return t.shape();
}

// x ↦ (x_1, ..., x_n, -x_n, ..., -x_1)
inline std::vector<Rational> doubled(const std::vector<Rational>& x) {
    std::vector<Rational> r = x;
    for (auto it = x.rbegin(); it != x.rend(); ++it) r.push_back(-*it);
    return r;
}

// a(w_λ) for an integral weight of a classical model, straight from the shape
// of the (possibly doubled) coordinate sequence.
inline long long a_value_classical(const std::vector<Rational>& lambda, Type x) {
    switch (x) {
        case Type::A:
            return a_value_partition(rs_shape(lambda), Type::A);
        case Type::B:
        case Type::C:
            return a_value_partition(rs_shape(doubled(lambda)), Type::B);
        case Type::D:
            return a_value_partition(rs_shape(doubled(lambda)), Type::D);
        default:
            throw std::invalid_argument("a-value formula requires classical type");
    }
}

// The unique X-special partition with the same per-row odd (B/C) or even (D)
// box counts as p; N is the target size (2n for C/D, 2n+1 for B).
inline Partition h_algorithm(const Partition& p, Type x, int n_target) {
    std::vector<int> want = (x == Type::D) ? even_boxes(p) : odd_boxes(p);
    while (!want.empty() && want.back() == 0) want.pop_back();
    std::vector<Partition> hits;
    enumerate_partitions(n_target, [&](const Partition& q) {
        if (!is_special_partition(q, x)) return;
        std::vector<int> have = (x == Type::D) ? even_boxes(q) : odd_boxes(q);
        while (!have.empty() && have.back() == 0) have.pop_back();
        if (have == want) hits.push_back(q);
    });
    if (hits.size() != 1)
        throw std::logic_error("h_algorithm: special partition not unique for " +
                               partition_str(p));
    return hits[0];
}

// Special partitions attached to an integral classical weight: the type-X one
// and its dual-type partner (B↔C share odd boxes; D is self-paired).
inline Partition special_partition_of_weight(const std::vector<Rational>& lambda, Type x) {
    Partition shape = rs_shape(doubled(lambda));
    int n2 = (int)lambda.size() * 2;
    switch (x) {
        case Type::B: return h_algorithm(shape, Type::B, n2 + 1);
        case Type::C: return h_algorithm(shape, Type::C, n2);
        case Type::D: return h_algorithm(shape, Type::D, n2);
        default: throw std::invalid_argument("h-algorithm requires type B, C or D");
    }
}

// (p + [1,0,...,0])_B — the C-special to B-special shift of the same weight.
inline Partition dual_shift_bc(const Partition& p_c) {
    Partition q = normalized(p_c);
    if (q.empty())
        q.push_back(1);
    else
        q[0] += 1;
    return collapse(q, Type::B);
}

} // namespace orbitatlas
