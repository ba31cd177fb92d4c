#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitatlas/linalg.hpp"

namespace orbitatlas {

enum class Type { A, B, C, D, G2, F4, E6, E7, E8 };

inline std::string type_name(Type t, int rank) {
    switch (t) {
        case Type::A: return "A" + std::to_string(rank);
        case Type::B: return "B" + std::to_string(rank);
        case Type::C: return "C" + std::to_string(rank);
        case Type::D: return "D" + std::to_string(rank);
        case Type::G2: return "G2";
        case Type::F4: return "F4";
        case Type::E6: return "E6";
        case Type::E7: return "E7";
        case Type::E8: return "E8";
    }
    return "?";
}

inline bool is_exceptional(Type t) {
    return t == Type::G2 || t == Type::F4 || t == Type::E6 || t == Type::E7 || t == Type::E8;
}

struct Root {
    Vec coords;
};

// ⟨λ, α∨⟩ = 2(λ,α)/(α,α) under the standard Euclidean form.
inline Rational pairing(const Vec& lambda, const Vec& alpha) {
    return Rational(2) * dot(lambda, alpha) / dot(alpha, alpha);
}

// A full standard model in Bourbaki coordinates: positive roots, simple
// roots, Cartan matrix, fundamental weights, highest root and its marks.
class RootSystem {
public:
    Type type;
    int rank = 0;
    int coordinate_dim = 0;
    std::vector<Vec> positive_roots;
    std::vector<Vec> simple_roots;           // Bourbaki order, 0-based storage
    std::vector<std::vector<long long>> cartan; // A[i][j] = ⟨α_i, α_j∨⟩
    Vec highest_root;
    std::vector<long long> marks;            // highest root = Σ marks[i]·α_i
    std::vector<Vec> fundamental_weights;    // representatives in span(simple roots)

    std::string name() const { return type_name(type, rank); }
    size_t num_positive() const { return positive_roots.size(); }

    Rational pair_simple(const Vec& lambda, int i) const {
        return pairing(lambda, simple_roots[i]);
    }

    // k_i = ⟨λ, α_i∨⟩ over all simple roots.
    std::vector<Rational> integrality_pattern(const Vec& lambda) const {
        std::vector<Rational> k(rank);
        for (int i = 0; i < rank; ++i) k[i] = pair_simple(lambda, i);
        return k;
    }

    bool is_integral(const Vec& lambda) const {
        for (int i = 0; i < rank; ++i)
            if (!pair_simple(lambda, i).is_integer()) return false;
        return true;
    }

    // ⟨μ, α∨⟩ ∉ ℤ_{>0} for every positive root.
    bool is_antidominant(const Vec& lambda) const {
        for (const auto& a : positive_roots) {
            Rational p = pairing(lambda, a);
            if (p.is_integer() && p.num() > 0) return false;
        }
        return true;
    }

    // ⟨μ, α∨⟩ ∉ ℤ_{<0} for every positive root.
    bool is_dominant(const Vec& lambda) const {
        for (const auto& a : positive_roots) {
            Rational p = pairing(lambda, a);
            if (p.is_integer() && p.num() < 0) return false;
        }
        return true;
    }

    bool is_regular(const Vec& lambda) const {
        for (const auto& a : positive_roots)
            if (pairing(lambda, a).is_zero()) return false;
        return true;
    }

    // λ from fundamental-weight coefficients k_i (1-based Bourbaki order in input vector).
    Vec weight_from_fund(const std::vector<Rational>& k) const {
        if ((int)k.size() != rank) throw std::invalid_argument("coordinate mismatch");
        Vec v(coordinate_dim, Rational(0));
        for (int i = 0; i < rank; ++i) v = add(v, scale(k[i], fundamental_weights[i]));
        return v;
    }

    void validate_weight(const Vec& lambda) const {
        if ((int)lambda.size() != coordinate_dim) throw std::invalid_argument("coordinate mismatch");
        if (type == Type::E6) {
            if (!(lambda[5] == lambda[6] && lambda[6] == -lambda[7]))
                throw std::invalid_argument("E6 weight requires λ6 = λ7 = -λ8");
        } else if (type == Type::E7) {
            if (!(lambda[6] == -lambda[7]))
                throw std::invalid_argument("E7 weight requires λ7 = -λ8");
        } else if (type == Type::G2) {
            if (!(lambda[0] + lambda[1] + lambda[2]).is_zero())
                throw std::invalid_argument("G2 weight requires λ1+λ2+λ3 = 0");
        }
    }

    // Shortest / longest root squared lengths, used for length classification.
    Rational norm2(const Vec& a) const { return dot(a, a); }
};

namespace detail {

inline Vec unit(int dim, int i, Rational c = Rational(1)) {
    Vec v(dim, Rational(0));
    v[i] = c;
    return v;
}

inline void finish(RootSystem& rs) {
    int n = rs.rank;
    rs.cartan.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs.cartan[i][j] = pairing(rs.simple_roots[i], rs.simple_roots[j]).to_integer();

    // marks: highest root = Σ c_i α_i
    {
        std::vector<Vec> cols(rs.coordinate_dim, Vec(n));
        std::vector<Vec> rows(rs.coordinate_dim, Vec(n));
        for (int d = 0; d < rs.coordinate_dim; ++d)
            for (int j = 0; j < n; ++j) rows[d][j] = rs.simple_roots[j][d];
        Vec b(rs.coordinate_dim);
        for (int d = 0; d < rs.coordinate_dim; ++d) b[d] = rs.highest_root[d];
        Vec c = solve_linear(rows, b);
        rs.marks.resize(n);
        for (int j = 0; j < n; ++j) rs.marks[j] = c[j].to_integer();
    }

    // fundamental weights, solved inside span(simple roots):
    // ω_i = Σ_j c_j α_j with Σ_j c_j ⟨α_j, α_k∨⟩ = δ_ik
    rs.fundamental_weights.resize(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Vec> a(n, Vec(n));
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) a[k][j] = Rational(rs.cartan[j][k]);
        Vec b(n, Rational(0));
        b[i] = Rational(1);
        Vec c = solve_linear(a, b);
        Vec w(rs.coordinate_dim, Rational(0));
        for (int j = 0; j < n; ++j) w = add(w, scale(c[j], rs.simple_roots[j]));
        rs.fundamental_weights[i] = w;
    }
}

inline void half_sum_roots(RootSystem& rs, int nsign, int dim, const Vec& tail, int parity) {
    // ½(±ε_1 ± ... ± ε_nsign + tail), number of minus signs ≡ parity (mod 2)
    for (int mask = 0; mask < (1 << nsign); ++mask) {
        if (__builtin_popcount(mask) % 2 != parity) continue;
        Vec v = tail;
        for (int i = 0; i < nsign; ++i) v[i] = Rational(mask >> i & 1 ? -1 : 1, 2);
        rs.positive_roots.push_back(v);
    }
}

} // namespace detail

inline RootSystem build_root_system(Type t, int rank = 0) {
    using detail::unit;
    RootSystem rs;
    rs.type = t;
    auto half = [](int a) { return Rational(a, 2); };
    switch (t) {
        case Type::A: {
            if (rank < 1) throw std::invalid_argument("unknown root system");
            rs.rank = rank;
            rs.coordinate_dim = rank + 1;
            int d = rs.coordinate_dim;
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j)
                    rs.positive_roots.push_back(sub(unit(d, i), unit(d, j)));
            for (int i = 0; i < rank; ++i)
                rs.simple_roots.push_back(sub(unit(d, i), unit(d, i + 1)));
            rs.highest_root = sub(unit(d, 0), unit(d, d - 1));
            break;
        }
        case Type::B: {
            if (rank < 2) throw std::invalid_argument("unknown root system");
            rs.rank = rank;
            rs.coordinate_dim = rank;
            int d = rank;
            for (int i = 0; i < d; ++i) rs.positive_roots.push_back(unit(d, i));
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) {
                    rs.positive_roots.push_back(sub(unit(d, i), unit(d, j)));
                    rs.positive_roots.push_back(add(unit(d, i), unit(d, j)));
                }
            for (int i = 0; i + 1 < rank; ++i)
                rs.simple_roots.push_back(sub(unit(d, i), unit(d, i + 1)));
            rs.simple_roots.push_back(unit(d, rank - 1));
            rs.highest_root = add(unit(d, 0), unit(d, 1));
            break;
        }
        case Type::C: {
            if (rank < 3) throw std::invalid_argument("unknown root system");
            rs.rank = rank;
            rs.coordinate_dim = rank;
            int d = rank;
            for (int i = 0; i < d; ++i) rs.positive_roots.push_back(unit(d, i, Rational(2)));
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) {
                    rs.positive_roots.push_back(sub(unit(d, i), unit(d, j)));
                    rs.positive_roots.push_back(add(unit(d, i), unit(d, j)));
                }
            for (int i = 0; i + 1 < rank; ++i)
                rs.simple_roots.push_back(sub(unit(d, i), unit(d, i + 1)));
            rs.simple_roots.push_back(unit(d, rank - 1, Rational(2)));
            rs.highest_root = unit(d, 0, Rational(2));
            break;
        }
        case Type::D: {
            if (rank < 4) throw std::invalid_argument("unknown root system");
            rs.rank = rank;
            rs.coordinate_dim = rank;
            int d = rank;
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) {
                    rs.positive_roots.push_back(sub(unit(d, i), unit(d, j)));
                    rs.positive_roots.push_back(add(unit(d, i), unit(d, j)));
                }
            for (int i = 0; i + 1 < rank; ++i)
                rs.simple_roots.push_back(sub(unit(d, i), unit(d, i + 1)));
            rs.simple_roots.push_back(add(unit(d, rank - 2), unit(d, rank - 1)));
            rs.highest_root = add(unit(d, 0), unit(d, 1));
            break;
        }
        case Type::G2: {
            rs.rank = 2;
            rs.coordinate_dim = 3;
            Vec a1 = {Rational(1), Rational(-1), Rational(0)};
            Vec a2 = {Rational(-2), Rational(1), Rational(1)};
            rs.simple_roots = {a1, a2};
            rs.positive_roots = {a1,
                                 a2,
                                 add(a1, a2),
                                 add(scale(Rational(2), a1), a2),
                                 add(scale(Rational(3), a1), a2),
                                 add(scale(Rational(3), a1), scale(Rational(2), a2))};
            rs.highest_root = rs.positive_roots.back();
            break;
        }
        case Type::F4: {
            rs.rank = 4;
            rs.coordinate_dim = 4;
            int d = 4;
            for (int i = 0; i < 4; ++i) rs.positive_roots.push_back(unit(d, i));
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    rs.positive_roots.push_back(sub(unit(d, i), unit(d, j)));
                    rs.positive_roots.push_back(add(unit(d, i), unit(d, j)));
                }
            for (int mask = 0; mask < 8; ++mask) {
                Vec v(4);
                v[0] = half(1);
                for (int i = 0; i < 3; ++i) v[i + 1] = half(mask >> i & 1 ? -1 : 1);
                rs.positive_roots.push_back(v);
            }
            rs.simple_roots = {sub(unit(d, 1), unit(d, 2)), sub(unit(d, 2), unit(d, 3)),
                               unit(d, 3), Vec{half(1), half(-1), half(-1), half(-1)}};
            rs.highest_root = add(unit(d, 0), unit(d, 1));
            break;
        }
        case Type::E6: {
            rs.rank = 6;
            rs.coordinate_dim = 8;
            int d = 8;
            for (int j = 0; j < 5; ++j)
                for (int i = j + 1; i < 5; ++i) {
                    rs.positive_roots.push_back(sub(unit(d, i), unit(d, j)));
                    rs.positive_roots.push_back(add(unit(d, i), unit(d, j)));
                }
            Vec tail(d, Rational(0));
            tail[5] = half(-1);
            tail[6] = half(-1);
            tail[7] = half(1);
            detail::half_sum_roots(rs, 5, d, tail, 0);
            Vec a1(d, Rational(0));
            for (int i = 1; i < 7; ++i) a1[i] = half(-1);
            a1[0] = half(1);
            a1[7] = half(1);
            rs.simple_roots.push_back(a1);
            rs.simple_roots.push_back(add(unit(d, 0), unit(d, 1)));
            for (int k = 3; k <= 6; ++k)
                rs.simple_roots.push_back(sub(unit(d, k - 2), unit(d, k - 3)));
            Vec hr(d, Rational(0));
            for (int i = 0; i < 5; ++i) hr[i] = half(1);
            hr[5] = half(-1);
            hr[6] = half(-1);
            hr[7] = half(1);
            rs.highest_root = hr;
            break;
        }
        case Type::E7: {
            rs.rank = 7;
            rs.coordinate_dim = 8;
            int d = 8;
            for (int j = 0; j < 6; ++j)
                for (int i = j + 1; i < 6; ++i) {
                    rs.positive_roots.push_back(sub(unit(d, i), unit(d, j)));
                    rs.positive_roots.push_back(add(unit(d, i), unit(d, j)));
                }
            rs.positive_roots.push_back(sub(unit(d, 7), unit(d, 6)));
            Vec tail(d, Rational(0));
            tail[6] = half(-1);
            tail[7] = half(1);
            detail::half_sum_roots(rs, 6, d, tail, 1);
            Vec a1(d, Rational(0));
            for (int i = 1; i < 7; ++i) a1[i] = half(-1);
            a1[0] = half(1);
            a1[7] = half(1);
            rs.simple_roots.push_back(a1);
            rs.simple_roots.push_back(add(unit(d, 0), unit(d, 1)));
            for (int k = 3; k <= 7; ++k)
                rs.simple_roots.push_back(sub(unit(d, k - 2), unit(d, k - 3)));
            rs.highest_root = sub(unit(d, 7), unit(d, 6));
            break;
        }
        case Type::E8: {
            rs.rank = 8;
            rs.coordinate_dim = 8;
            int d = 8;
            for (int j = 0; j < 8; ++j)
                for (int i = j + 1; i < 8; ++i) {
                    rs.positive_roots.push_back(sub(unit(d, i), unit(d, j)));
                    rs.positive_roots.push_back(add(unit(d, i), unit(d, j)));
                }
            Vec tail(d, Rational(0));
            tail[7] = half(1);
            detail::half_sum_roots(rs, 7, d, tail, 0);
            Vec a1(d, Rational(0));
            for (int i = 1; i < 7; ++i) a1[i] = half(-1);
            a1[0] = half(1);
            a1[7] = half(1);
            rs.simple_roots.push_back(a1);
            rs.simple_roots.push_back(add(unit(d, 0), unit(d, 1)));
            for (int k = 3; k <= 8; ++k)
                rs.simple_roots.push_back(sub(unit(d, k - 2), unit(d, k - 3)));
            rs.highest_root = add(unit(d, 6), unit(d, 7));
            break;
        }
    }
    detail::finish(rs);
    return rs;
}

inline Type parse_type(std::string_view s, int& rank) {
    std::string u(s);
    for (auto& c : u) c = (char)toupper(c);
    if (u == "G2") { rank = 2; return Type::G2; }
    if (u == "F4") { rank = 4; return Type::F4; }
    if (u == "E6") { rank = 6; return Type::E6; }
    if (u == "E7") { rank = 7; return Type::E7; }
    if (u == "E8") { rank = 8; return Type::E8; }
    if (u.size() >= 1 && (u[0] == 'A' || u[0] == 'B' || u[0] == 'C' || u[0] == 'D')) {
        if (u.size() > 1) rank = std::stoi(u.substr(1));
        if (rank <= 0) throw std::invalid_argument("unknown root system");
        switch (u[0]) {
            case 'A': return Type::A;
            case 'B': return Type::B;
            case 'C': return Type::C;
            case 'D': return Type::D;
        }
    }
    throw std::invalid_argument("unknown root system");
}

// Shared immutable registry of the standard models.
inline const RootSystem& standard_system(Type t, int rank = 0) {
    static std::map<std::pair<Type, int>, std::unique_ptr<RootSystem>> cache;
    int r = rank;
    if (t == Type::G2) r = 2;
    if (t == Type::F4) r = 4;
    if (t == Type::E6) r = 6;
    if (t == Type::E7) r = 7;
    if (t == Type::E8) r = 8;
    auto key = std::make_pair(t, r);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<RootSystem>(build_root_system(t, r))).first;
    return *it->second;
}

// Extended Dynkin diagram: node 0 is α_0 = -highest_root with mark 1,
// nodes 1..rank are the simple roots with the highest-root marks.
struct ExtendedDiagram {
    std::vector<Vec> nodes;            // [0] = -highest root, then simple roots
    std::vector<long long> marks;      // marks[0] = 1
    std::vector<std::vector<int>> adj; // nonzero pairing between nodes
};

inline ExtendedDiagram extended_diagram(const RootSystem& rs) {
    ExtendedDiagram ed;
    ed.nodes.push_back(scale(Rational(-1), rs.highest_root));
    for (auto& a : rs.simple_roots) ed.nodes.push_back(a);
    ed.marks.push_back(1);
    for (auto m : rs.marks) ed.marks.push_back(m);
    int n = (int)ed.nodes.size();
    ed.adj.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !dot(ed.nodes[i], ed.nodes[j]).is_zero()) ed.adj[i].push_back(j);
    return ed;
}

} // namespace orbitatlas
