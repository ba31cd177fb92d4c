#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitatlas/weyl.hpp"

namespace orbitatlas {

// One irreducible component of the integral root subsystem Φ_[λ], classified
// and equipped with the isomorphism φ onto its standard model.
struct SubsystemComponent {
    Type type;
    int rank = 0;
    bool short_roots = false;          // every root short in a two-length ambient
    std::vector<Vec> positive_roots;   // inside the ambient system
    std::vector<Vec> simple_roots;     // detected via the ρ filter, deterministic order
    std::vector<int> phi;              // simple_roots[i] ↦ model simple φ[i] (0-based)
    const RootSystem* model = nullptr;

    std::string name() const {
        std::string n = type_name(type, rank);
        if (short_roots) {
            // Ã tag for short-root components of F4 and G2
            n = "Ã" + n.substr(1);
        }
        return n;
    }
};

inline bool vec_less(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

// Positive roots with integral pairing against λ.
inline std::vector<Vec> integral_subsystem(const RootSystem& rs, const Vec& lambda) {
    std::vector<Vec> out;
    for (const auto& a : rs.positive_roots)
        if (pairing(lambda, a).is_integer()) out.push_back(a);
    return out;
}

// Reflection closure of a simple system inside the ambient system; returns
// the positive part.
inline std::vector<Vec> generate_subsystem(const RootSystem& rs, const std::vector<Vec>& simples) {
    std::set<std::string> seen;
    std::vector<Vec> roots;
    auto push = [&](const Vec& v) {
        auto key = detail::vec_key(v);
        if (seen.insert(key).second) roots.push_back(v);
    };
    for (const auto& s : simples) {
        push(s);
        push(scale(Rational(-1), s));
    }
    for (size_t i = 0; i < roots.size(); ++i) {
        for (const auto& s : simples) {
            // closing under the simple reflections suffices for a root system
            push(reflect(roots[i], s));
        }
        for (size_t j = 0; j < roots.size(); ++j) push(reflect(roots[i], roots[j]));
    }
    std::set<std::string> ambient_pos;
    for (const auto& a : rs.positive_roots) ambient_pos.insert(detail::vec_key(a));
    std::vector<Vec> out;
    for (const auto& v : roots)
        if (ambient_pos.count(detail::vec_key(v))) out.push_back(v);
    std::sort(out.begin(), out.end(), vec_less);
    return out;
}

namespace detail {

inline SubsystemComponent classify_component(const RootSystem& rs, std::vector<Vec> roots) {
    SubsystemComponent comp;
    comp.positive_roots = roots;

    // simple system via the half-sum filter
    Vec rho(rs.coordinate_dim, Rational(0));
    for (const auto& a : roots) rho = add(rho, a);
    rho = scale(Rational(1, 2), rho);
    for (const auto& a : roots)
        if (pairing(rho, a) == Rational(1)) comp.simple_roots.push_back(a);
    std::sort(comp.simple_roots.begin(), comp.simple_roots.end(), vec_less);

    int n = (int)comp.simple_roots.size();
    comp.rank = n;
    size_t count = roots.size();

    // root length statistics relative to the ambient system
    Rational maxn(0), minn;
    bool first = true;
    for (const auto& a : roots) {
        Rational nn = dot(a, a);
        if (first || nn > maxn) maxn = nn;
        if (first || nn < minn) minn = nn;
        first = false;
    }
    bool mixed = maxn != minn;
    size_t num_short = 0;
    if (mixed)
        for (const auto& a : roots)
            if (dot(a, a) == minn) ++num_short;

    Rational ambient_max(0);
    for (const auto& a : rs.positive_roots) {
        Rational nn = dot(a, a);
        if (nn > ambient_max) ambient_max = nn;
    }
    bool ambient_two_lengths = false;
    for (const auto& a : rs.positive_roots)
        if (dot(a, a) != ambient_max) { ambient_two_lengths = true; break; }

    auto fail = [&]() { throw std::logic_error("inconsistent root counts"); };

    if (!mixed) {
        comp.short_roots = ambient_two_lengths && maxn < ambient_max;
        if (count == (size_t)(n * (n + 1)) / 2)
            comp.type = Type::A;
        else if (n >= 4 && count == (size_t)(n * n - n))
            comp.type = Type::D;
        else if (n == 6 && count == 36)
            comp.type = Type::E6;
        else if (n == 7 && count == 63)
            comp.type = Type::E7;
        else if (n == 8 && count == 120)
            comp.type = Type::E8;
        else
            fail();
    } else {
        // two lengths inside the component: B, C, G2 or F4
        if (n == 2 && count == 6)
            comp.type = Type::G2;
        else if (n == 4 && count == 24)
            comp.type = Type::F4;
        else if (count == (size_t)(n * n) && num_short == (size_t)n)
            comp.type = Type::B;
        else if (count == (size_t)(n * n) && count - num_short == (size_t)n)
            comp.type = Type::C;
        else
            fail();
    }

    comp.model = &standard_system(comp.type, comp.rank);

    // Cartan matrix of the detected simple system
    std::vector<std::vector<long long>> sub(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sub[i][j] = pairing(comp.simple_roots[i], comp.simple_roots[j]).to_integer();
    comp.phi = detail::cartan_isomorphism(sub, comp.model->cartan);
    if (comp.phi.empty()) throw std::logic_error("inconsistent root counts");
    return comp;
}

} // namespace detail

// Orthogonal irreducible components of a root subsystem, classified and
// ordered canonically (rank descending, type tag, smallest simple root).
inline std::vector<SubsystemComponent> decompose_and_classify(const RootSystem& rs,
                                                              const std::vector<Vec>& positive) {
    size_t m = positive.size();
    std::vector<int> comp_id(m, -1);
    int ncomp = 0;
    for (size_t i = 0; i < m; ++i) {
        if (comp_id[i] >= 0) continue;
        comp_id[i] = ncomp;
        std::vector<size_t> stack{i};
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < m; ++j) {
                if (comp_id[j] >= 0) continue;
                if (!dot(positive[cur], positive[j]).is_zero()) {
                    comp_id[j] = ncomp;
                    stack.push_back(j);
                }
            }
        }
        ++ncomp;
    }
    std::vector<SubsystemComponent> comps;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<Vec> roots;
        for (size_t i = 0; i < m; ++i)
            if (comp_id[i] == c) roots.push_back(positive[i]);
        std::sort(roots.begin(), roots.end(), vec_less);
        comps.push_back(detail::classify_component(rs, roots));
    }
    std::sort(comps.begin(), comps.end(), [](const SubsystemComponent& a, const SubsystemComponent& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        if (a.type != b.type) return type_name(a.type, a.rank) < type_name(b.type, b.rank);
        if (a.short_roots != b.short_roots) return !a.short_roots;
        return vec_less(a.simple_roots[0], b.simple_roots[0]);
    });
    return comps;
}

inline std::vector<SubsystemComponent> decompose_integral(const RootSystem& rs, const Vec& lambda) {
    return decompose_and_classify(rs, integral_subsystem(rs, lambda));
}

// k_t = ⟨λ, β_t∨⟩ over the component's detected simple roots.
inline std::vector<Rational> component_pattern(const SubsystemComponent& comp, const Vec& lambda) {
    std::vector<Rational> k;
    for (const auto& b : comp.simple_roots) k.push_back(pairing(lambda, b));
    return k;
}

// λ'|Φ_i = Σ k_t φ(ω_t): the restricted weight in the model's coordinates.
inline Vec restrict_weight(const SubsystemComponent& comp, const Vec& lambda) {
    auto k = component_pattern(comp, lambda);
    Vec out(comp.model->coordinate_dim, Rational(0));
    for (size_t t = 0; t < k.size(); ++t) {
        if (!k[t].is_integer()) throw std::domain_error("reduction requires integral weight");
        out = add(out, scale(k[t], comp.model->fundamental_weights[comp.phi[t]]));
    }
    if (!comp.model->is_integral(out))
        throw std::logic_error("restricted weight is not integral in the model system");
    return out;
}

// k-pattern in the model's Bourbaki order (index i = model simple i).
inline std::vector<Rational> restrict_pattern(const SubsystemComponent& comp, const Vec& lambda) {
    auto k = component_pattern(comp, lambda);
    std::vector<Rational> out(comp.rank, Rational(0));
    for (size_t t = 0; t < k.size(); ++t) out[comp.phi[t]] = k[t];
    return out;
}

// Pseudo-maximal templates per ambient type: the component type multisets of
// the maximal proper subsystems Φ̃(i), Φ(j).
inline std::vector<std::vector<std::string>> pseudo_maximal_templates(Type ambient) {
    switch (ambient) {
        case Type::G2:
            return {{"A2"}, {"A1", "Ã1"}};
        case Type::F4:
            return {{"C4"}, {"A2", "Ã2"}, {"Ã3", "A1"}, {"B3", "Ã1"}};
        case Type::E6:
            return {{"D5"}, {"A5", "A1"}, {"A2", "A2", "A2"}};
        case Type::E7:
            return {{"D6", "A1"}, {"A7"}, {"A5", "A2"}, {"A3", "A3", "A1"}, {"E6"}};
        case Type::E8:
            return {{"D8"}, {"A8"}, {"E7", "A1"}, {"A7", "A1"}, {"A5", "A2", "A1"},
                    {"A4", "A4"}, {"D5", "A3"}, {"E6", "A2"}};
        default:
            return {};
    }
}

struct PseudoMaximalResult {
    bool pseudo_maximal = false;
    std::string matched; // template name like "C4" or "A2x~A2"
};

inline PseudoMaximalResult pseudo_maximal_check(Type ambient,
                                                const std::vector<SubsystemComponent>& comps) {
    std::vector<std::string> names;
    for (const auto& c : comps) names.push_back(c.name());
    std::sort(names.begin(), names.end());
    for (auto tmpl : pseudo_maximal_templates(ambient)) {
        auto sorted = tmpl;
        std::sort(sorted.begin(), sorted.end());
        if (sorted == names) {
            std::string label;
            for (size_t i = 0; i < tmpl.size(); ++i) {
                if (i) label += "x";
                label += tmpl[i];
            }
            return {true, label};
        }
    }
    return {false, ""};
}

} // namespace orbitatlas
