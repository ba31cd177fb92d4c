#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>

#include "orbitatlas/klcells.hpp"
#include "orbitatlas/orbitdata.hpp"
#include "orbitatlas/subsystem.hpp"
#include "orbitatlas/tableaux.hpp"

namespace orbitatlas {

// Raised when a computation is well-posed but a required table or cell datum
// is not available; callers surface it instead of guessing.
struct missing_datum_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AuditEntry {
    std::string step;
    std::string datum;
    std::string provenance;
};

struct ComponentResult {
    std::string name;
    Type type = Type::A;
    int rank = 0;
    bool short_roots = false;
    bool exceptional = false;
    std::vector<Rational> pattern;  // ⟨λ, α∨⟩ in model Bourbaki order
    Vec lambda_prime;               // model coordinates
    WeylWord w;                     // reduction word in the model system
    long long a = -1;
    std::string method;             // "rs" | "cells" | "cell-data"
    Partition pi;                   // classical: special partition of the component type
    Partition pi_dual;              // dual-type partner (B↔C), equal to pi for A/D
    Numeral numeral = Numeral::None;
    std::string chi_char;           // exceptional factors
    std::string chi_orbit;
};

struct OrbitResult {
    bool resolved = false;
    std::string label;
    long long dim = -1;
    bool special = false;
    std::string character;
    std::string failure;
};

struct Result {
    Type ambient;
    int rank = 0;
    Vec lambda;
    long long positive_count = 0;
    bool integral = false, regular = false, dominant = false, antidominant = false;
    bool a_resolved = false;
    long long a_value = -1;
    long long gk_dim = -1;
    std::string strategy; // "integral" | "tables" | "direct"
    std::vector<ComponentResult> components;
    WeylWord w_ambient; // reduction word in the ambient system when λ is integral
    Vec mu;             // the antidominant weight w⁻¹λ
    OrbitResult orbit;
    std::vector<AuditEntry> audit;
    std::string pending; // non-empty when a component is missing cell data
};

// A factor of the special representation π∨_{w_λ} together with the component
// realization it came from (used for embeddings during disambiguation).
struct RepFactor {
    Type type = Type::A;
    int rank = 0;
    bool short_roots = false;
    const SubsystemComponent* comp = nullptr; // null when no realization is needed
    bool exceptional = false;
    Partition pi_dual;    // classical factors: dual-side special partition
    Numeral numeral = Numeral::None;
    std::string chi_orbit; // exceptional factors: special orbit label in the model
};

namespace detail {

// Coefficients of the regular sl2 neutral element along an A_k chain.
inline std::vector<long long> a_chain_coefficients(int k) {
    std::vector<long long> c(k);
    for (int i = 1; i <= k; ++i) c[i - 1] = (long long)i * (k + 1 - i);
    return c;
}

// sl2 weight coordinates of the orbit with partition q inside the standard
// classical model of type x (A or D), in the model's ε coordinates. For very
// even q the two non-conjugate GL embeddings differ by the diagram
// automorphism; `flip` selects the twisted one.
inline Vec model_h_vector(const Partition& q, Type x, const RootSystem& model, bool flip = false) {
    Vec h(model.coordinate_dim, Rational(0));
    size_t slot = 0;
    if (x == Type::A) {
        for (int v : q)
            for (int t = 0; t < v; ++t) h[slot++] = Rational(v - 1 - 2 * t);
        return h;
    }
    if (x != Type::D) throw std::logic_error("model_h_vector: unsupported type");
    std::map<int, int> mult;
    for (int v : q) mult[v]++;
    std::vector<int> core;
    std::vector<int> pairs;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        if (it->second % 2) core.push_back(it->first);
        for (int i = 0; i < it->second / 2; ++i) pairs.push_back(it->first);
    }
    // core: positive sl2 weights with multiplicity, plus half of the zeros
    std::vector<int> weights;
    int zeros = 0;
    for (int v : core)
        for (int t = 0; t < v; ++t) {
            int wgt = v - 1 - 2 * t;
            if (wgt > 0) weights.push_back(wgt);
            if (wgt == 0) ++zeros;
        }
    for (int w : weights) h[slot++] = Rational(w);
    for (int z = 0; z < zeros / 2; ++z) h[slot++] = Rational(0);
    for (int v : pairs)
        for (int t = 0; t < v; ++t) h[slot++] = Rational(v - 1 - 2 * t);
    if (slot != (size_t)model.coordinate_dim)
        throw std::logic_error("model_h_vector: slot mismatch");
    if (flip) h[slot - 1] = -h[slot - 1];
    return h;
}

// Express a vector lying in span(simple roots) in the simple-root basis.
inline std::vector<Rational> in_simple_basis(const Vec& v, const RootSystem& model) {
    std::vector<Vec> rows(model.coordinate_dim, Vec(model.rank));
    for (int d = 0; d < model.coordinate_dim; ++d)
        for (int j = 0; j < model.rank; ++j) rows[d][j] = model.simple_roots[j][d];
    return solve_linear(rows, v);
}

// Pull a model-space vector back through φ into ambient coordinates.
inline Vec pull_back(const Vec& model_vec, const SubsystemComponent& comp) {
    auto coeffs = in_simple_basis(model_vec, *comp.model);
    std::vector<int> inv(comp.rank);
    for (int i = 0; i < comp.rank; ++i) inv[comp.phi[i]] = i;
    Vec out(comp.simple_roots[0].size(), Rational(0));
    for (int j = 0; j < comp.rank; ++j)
        out = add(out, scale(coeffs[j], comp.simple_roots[inv[j]]));
    return out;
}

// Neutral element of a decorated pure-A pseudo-Levi class realized inside a
// standard model, built from the embedded representative node subsets.
inline Vec model_h_from_rep(const std::vector<std::vector<int>>& rep, const RootSystem& model) {
    auto ed = extended_diagram(model);
    Vec h(model.coordinate_dim, Rational(0));
    for (const auto& nodes : rep) {
        // order the nodes into a chain by adjacency
        std::vector<int> chain;
        std::vector<int> left = nodes;
        auto adjacent = [&](int a, int b) {
            return !dot(ed.nodes[a], ed.nodes[b]).is_zero();
        };
        // find an endpoint
        int start = left[0];
        for (int cand : left) {
            int deg = 0;
            for (int other : left)
                if (other != cand && adjacent(cand, other)) ++deg;
            if (deg <= 1) { start = cand; break; }
        }
        chain.push_back(start);
        left.erase(std::find(left.begin(), left.end(), start));
        while (!left.empty()) {
            bool advanced = false;
            for (auto it = left.begin(); it != left.end(); ++it) {
                if (adjacent(chain.back(), *it)) {
                    chain.push_back(*it);
                    left.erase(it);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) throw std::logic_error("decorated representative is not a chain");
        }
        auto coeff = a_chain_coefficients((int)chain.size());
        for (size_t i = 0; i < chain.size(); ++i)
            h = add(h, scale(Rational(coeff[i]), ed.nodes[chain[i]]));
    }
    return h;
}

} // namespace detail

// Weighted Dynkin diagram of the dominant representative of h: apply positive
// index reduction, negate the antidominant result, pair against the simples.
inline std::vector<int> weighted_dynkin_diagram(const RootSystem& rs, const Vec& h) {
    auto red = positive_index_reduction(h, rs.simple_roots);
    Vec hstar = scale(Rational(-1), red.mu);
    std::vector<int> diagram;
    for (int i = 0; i < rs.rank; ++i)
        diagram.push_back((int)rs.pair_simple(hstar, i).to_integer());
    return diagram;
}

struct PipelineOptions {
    size_t max_engine_order = 10080; // covers G2, F4, A_n up to n = 6, B/C/D small
    std::shared_ptr<CellDataFile> cell_data;
};

class Pipeline {
public:
    explicit Pipeline(PipelineOptions opts = {}) : opts_(std::move(opts)) {
        if (!opts_.cell_data) opts_.cell_data = std::make_shared<CellDataFile>();
        data_ = &orbit_data();
    }

    Pipeline(PipelineOptions opts, const OrbitData& data) : Pipeline(std::move(opts)) {
        data_ = &data;
    }

    const OrbitData& data() const { return *data_; }

    Result gk_dim(Type t, int rank, const Vec& lambda) const {
        return run(t, rank, lambda, false);
    }
    Result annihilator_orbit(Type t, int rank, const Vec& lambda) const {
        return run(t, rank, lambda, true);
    }

    Result run(Type t, int rank, Vec lambda, bool want_orbit) const {
        const RootSystem& rs = standard_system(t, rank);
        rs.validate_weight(lambda);
        Result res;
        res.ambient = t;
        res.rank = rs.rank;
        res.lambda = lambda;
        res.positive_count = (long long)rs.num_positive();
        res.integral = rs.is_integral(lambda);
        res.regular = rs.is_regular(lambda);
        res.dominant = rs.is_dominant(lambda);
        res.antidominant = rs.is_antidominant(lambda);

        if (res.integral && res.regular && res.dominant) {
            // finite-dimensional module
            res.a_resolved = true;
            res.a_value = res.positive_count;
            res.gk_dim = 0;
            res.strategy = "integral";
            note(res, "shortcut", "dominant regular integral weight", "finite-dimensional case");
            if (want_orbit && is_exceptional(t)) fill_orbit(res, "0");
            else if (want_orbit) res.orbit.failure = "orbit resolution supported for exceptional ambient types";
            res.mu = act_inverse(WeylWord{}, lambda, rs.simple_roots);
            return res;
        }

        auto comps = decompose_integral(rs, lambda);
        if (res.integral) {
            res.strategy = "integral";
        } else {
            auto pm = pseudo_maximal_check(t, comps);
            res.strategy = pm.pseudo_maximal ? "tables" : "direct";
            note(res, "pseudo-maximal", pm.pseudo_maximal ? pm.matched : "no",
                 "extended-diagram templates");
        }

        // a proper integral subsystem of an exceptional
        // group never contains a full-rank copy of G2/F4/E8
        if (!res.integral)
            for (const auto& c : comps)
                if (c.type == Type::G2 || c.type == Type::F4 || c.type == Type::E8)
                    throw std::logic_error("inconsistent root counts");

        std::vector<RepFactor> factors;
        long long total_a = 0;
        bool pending = false;
        for (const auto& comp : comps) {
            ComponentResult cr;
            cr.name = comp.name();
            cr.type = comp.type;
            cr.rank = comp.rank;
            cr.short_roots = comp.short_roots;
            cr.pattern = restrict_pattern(comp, lambda);
            cr.lambda_prime = restrict_weight(comp, lambda);
            auto red = positive_index_reduction_k(cr.pattern, comp.model->cartan);
            cr.w = red.w;
            RepFactor f;
            f.type = comp.type;
            f.rank = comp.rank;
            f.short_roots = comp.short_roots;
            if (is_exceptional(comp.type)) {
                cr.exceptional = true;
                resolve_exceptional(cr, comp, res);
                f.exceptional = true;
                f.chi_orbit = cr.chi_orbit;
            } else {
                cr.method = "rs";
                cr.a = a_value_classical(cr.lambda_prime, comp.type);
                if (comp.type == Type::A) {
                    cr.pi = rs_shape(cr.lambda_prime);
                    cr.pi_dual = cr.pi;
                } else {
                    cr.pi = special_partition_of_weight(cr.lambda_prime, comp.type);
                    Type dual = comp.type == Type::B   ? Type::C
                                : comp.type == Type::C ? Type::B
                                                       : Type::D;
                    Partition shape = rs_shape(doubled(cr.lambda_prime));
                    int target = dual == Type::B ? 2 * comp.rank + 1 : 2 * comp.rank;
                    cr.pi_dual = h_algorithm(shape, dual, target);
                    if (comp.type == Type::D && is_very_even(cr.pi))
                        note(res, "very-even partition", partition_str(cr.pi),
                             "numeral determined by the weighted-diagram route");
                }
                f.pi_dual = cr.pi_dual;
                f.numeral = cr.numeral;
            }
            if (cr.a < 0)
                pending = true;
            else
                total_a += cr.a;
            f.comp = &comp;
            res.components.push_back(cr);
            factors.push_back(f);
        }

        // antidominant representative, assembled componentwise; available even
        // when an a-value is still missing
        Vec mu = lambda;
        for (size_t i = 0; i < comps.size(); ++i) {
            const auto& comp = comps[i];
            std::vector<int> inv(comp.rank);
            for (int t = 0; t < comp.rank; ++t) inv[comp.phi[t]] = t;
            for (int letter : res.components[i].w.letters)
                mu = reflect(mu, comp.simple_roots[inv[letter - 1]]);
        }
        res.mu = mu;
        if (!rs.is_antidominant(res.mu))
            throw std::logic_error("reduction did not reach an antidominant weight");
        if (res.integral)
            res.w_ambient = positive_index_reduction(lambda, rs.simple_roots).w;

        if (pending) {
            res.pending = pending_message(res);
            return res;
        }
        res.a_resolved = true;
        res.a_value = total_a;
        res.gk_dim = res.positive_count - total_a;

        if (want_orbit) {
            if (!is_exceptional(t)) {
                res.orbit.failure = "orbit resolution supported for exceptional ambient types";
                return res;
            }
            resolve_orbit(res, factors);
        }
        return res;
    }

    // Orbit resolution from explicit special-representation factors; used both
    // by run() and by the appendix oracle harness.
    void resolve_orbit(Result& res, const std::vector<RepFactor>& factors) const {
        if (!res.a_resolved) return;
        long long dim = 2 * res.gk_dim;
        const OrbitData& od = *data_;

        // route 1: the dimension shortcut
        std::optional<std::string> by_dim;
        {
            auto cands = od.orbits_by_dim(res.ambient, dim);
            if (cands.size() == 1) {
                by_dim = cands[0]->label;
                note(res, "orbit route", "dimension shortcut: " + *by_dim,
                     "unique orbit of dimension " + std::to_string(dim));
            } else {
                note(res, "orbit route",
                     std::to_string(cands.size()) + " orbits of dimension " + std::to_string(dim),
                     "dimension shortcut unavailable");
            }
        }

        if (res.integral && factors.size() == 1 && factors[0].exceptional) {
            // integral case: the cell character's orbit is the answer itself
            const std::string& direct = factors[0].chi_orbit;
            if (!direct.empty()) {
                if (by_dim && normalize_label(*by_dim) != normalize_label(direct))
                    throw std::logic_error("cell orbit disagrees with the dimension shortcut");
                fill_orbit(res, direct);
                note(res, "orbit", res.orbit.label, "Springer orbit of the cell character");
                return;
            }
            if (by_dim) {
                fill_orbit(res, *by_dim);
                note(res, "orbit", res.orbit.label, "dimension shortcut");
                return;
            }
            res.orbit.failure = "unresolved (datum missing): cell character unavailable";
            return;
        }

        // route 3: d_LS + Bala-Carter + Sommers
        std::optional<std::string> by_sommers;
        std::string sommers_failure;
        try {
            by_sommers = sommers_route(res, factors);
        } catch (const missing_datum_error& e) {
            sommers_failure = e.what();
            note(res, "orbit route", "Sommers path unavailable", e.what());
        } catch (const std::domain_error& e) {
            sommers_failure = e.what();
            note(res, "orbit route", "Sommers path unavailable", e.what());
        }

        if (by_dim && by_sommers && normalize_label(*by_dim) != normalize_label(*by_sommers))
            throw std::logic_error("orbit routes disagree: " + *by_dim + " vs " + *by_sommers);
        if (by_sommers) {
            fill_orbit(res, *by_sommers);
            note(res, "orbit", res.orbit.label, "Sommers duality");
        } else if (by_dim) {
            fill_orbit(res, *by_dim);
            note(res, "orbit", res.orbit.label, "dimension shortcut");
        } else {
            res.orbit.failure = sommers_failure.empty()
                                    ? "unresolved (datum missing)"
                                    : "unresolved (datum missing): " + sommers_failure;
            return;
        }
        if (res.orbit.dim != dim)
            throw std::logic_error("Joseph identity violated: dim " +
                                   std::to_string(res.orbit.dim) + " vs 2*GKdim " +
                                   std::to_string(dim));
    }

    // One factor of d_LS^{H∨}(O(π∨)): either a classical partition in the
    // component's (self-dual) type or a decorated orbit of an E6/E7 model.
    struct DualBlock {
        const RepFactor* f;
        Partition q;
        std::string exc_label;
    };

    // π∨ factors → d_LS per factor → combined Bala-Carter pair → decoration →
    // Sommers lookup. Returns the annihilator orbit label.
    std::string sommers_route(Result& res, const std::vector<RepFactor>& factors) const {
        const OrbitData& od = *data_;
        BCLabel total;
        std::optional<Numeral> very_even_numeral;
        std::vector<DualBlock> blocks;
        for (const auto& f : factors) {
            DualBlock b;
            b.f = &f;
            if (f.exceptional) {
                if (f.chi_orbit.empty())
                    throw missing_datum_error("needs cell data for " +
                                              type_name(f.type, f.rank));
                b.exc_label = od.ls_dual_exceptional(f.type, f.chi_orbit);
                // decorations internal to the component model survive only
                // through the representative lookup during disambiguation
                BCLabel l = parse_bc_label(b.exc_label);
                l.primes = 0;
                total.merge(l);
            } else {
                Type x = f.type == Type::B   ? Type::C
                         : f.type == Type::C ? Type::B
                                             : f.type;
                b.q = d_ls_classical(f.pi_dual, x);
                LabelStyle style = LabelStyle::SimplyLaced;
                if (res.ambient == Type::F4 || res.ambient == Type::G2)
                    style = f.short_roots ? LabelStyle::F4ShortComponent
                                          : LabelStyle::F4LongComponent;
                total.merge(bala_carter_classical(b.q, x, style));
                if (f.numeral != Numeral::None && is_very_even(b.q)) {
                    if (very_even_numeral) throw missing_datum_error("decoration unresolved");
                    very_even_numeral = f.numeral;
                }
            }
            blocks.push_back(std::move(b));
        }
        note(res, "d_LS", bc_label_str(total), "componentwise Lusztig-Spaltenstein duals");

        if (od.is_ambiguous_label(res.ambient, total)) {
            if (very_even_numeral) {
                // oracle rows carry the published numeral; I pairs with one
                // prime and II with two across the duality tables
                total.primes = *very_even_numeral == Numeral::I ? 1 : 2;
                note(res, "decoration", bc_label_str(total), "numeral of the very even partition");
            } else {
                total.primes = diagram_decoration(res, blocks, total);
            }
        }
        std::string key = bc_label_str(total);
        std::string out = od.sommers_dual(res.ambient, key);
        note(res, "Sommers", key + " -> " + out, "duality tables");
        return out;
    }

private:
    PipelineOptions opts_;
    const OrbitData* data_;
    mutable std::map<std::string, std::unique_ptr<HeckeEngine>> engines_;
    mutable std::mutex engines_mutex_;

    static void note(Result& res, std::string step, std::string datum, std::string prov) {
        res.audit.push_back({std::move(step), std::move(datum), std::move(prov)});
    }

    static std::string pending_message(const Result& res) {
        for (const auto& c : res.components)
            if (c.a < 0) return "needs cell data for " + type_name(c.type, c.rank);
        return "";
    }

    const HeckeEngine* engine_for(Type t, int rank) const {
        size_t order = weyl_order(t, rank);
        if (order > opts_.max_engine_order) return nullptr;
        std::lock_guard<std::mutex> lock(engines_mutex_);
        std::string key = type_name(t, rank);
        auto it = engines_.find(key);
        if (it == engines_.end()) {
            it = engines_
                     .emplace(key, std::make_unique<HeckeEngine>(standard_system(t, rank).cartan,
                                                                 opts_.max_engine_order))
                     .first;
        }
        return it->second.get();
    }

    static size_t weyl_order(Type t, int n) {
        auto fact = [](int k) {
            size_t r = 1;
            for (int i = 2; i <= k; ++i) r *= i;
            return r;
        };
        switch (t) {
            case Type::A: return fact(n + 1);
            case Type::B:
            case Type::C: return fact(n) << n;
            case Type::D: return fact(n) << (n - 1);
            case Type::G2: return 12;
            case Type::F4: return 1152;
            case Type::E6: return 51840;
            case Type::E7: return 2903040;
            case Type::E8: return 696729600;
        }
        return SIZE_MAX;
    }

    // a-value and cell character for an exceptional component.
    void resolve_exceptional(ComponentResult& cr, const SubsystemComponent& comp, Result& res) const {
        std::string group = type_name(comp.type, comp.rank);
        // extreme cells need no engine: the identity lies in the cell of the
        // regular orbit, the longest element in the cell of the zero orbit
        if (cr.w.empty()) {
            cr.a = 0;
            cr.method = "cells";
            cr.chi_orbit = group;
            cr.chi_char = data_->orbit(comp.type, cr.chi_orbit).character;
            return;
        }
        bool dominant_regular = true;
        for (const auto& k : cr.pattern)
            if (!(k.is_integer() && k.num() >= 1)) dominant_regular = false;
        if (dominant_regular) {
            cr.a = (long long)comp.model->num_positive();
            cr.method = "cells";
            cr.chi_orbit = "0";
            cr.chi_char = data_->orbit(comp.type, "0").character;
            return;
        }
        if (opts_.cell_data && !opts_.cell_data->empty()) {
            if (const CellDatum* d = opts_.cell_data->find(group, cr.w)) {
                cr.a = d->a;
                cr.method = "cell-data";
                cr.chi_char = d->character;
                cr.chi_orbit = d->orbit.empty() ? "" : normalize_label(d->orbit);
                note(res, "cell datum", group + " word " + cr.w.str() + " a=" + std::to_string(d->a),
                     "precomputed cell data file");
                if (!cr.chi_orbit.empty()) return;
                // fall through to the engine only for the character when feasible
            }
        }
        const HeckeEngine* eng = engine_for(comp.type, comp.rank);
        if (!eng) {
            if (cr.a >= 0) return; // a came from the data file, orbit may stay empty
            cr.method = "missing";
            note(res, "cell datum", group + " word " + cr.w.str(),
                 "cell engine bounded; supply precomputed cell data");
            return;
        }
        size_t elt = eng->element_of(cr.w);
        long long a = eng->a_value(elt);
        if (cr.a >= 0 && cr.a != a)
            throw std::logic_error("cell data disagrees with the native engine");
        cr.a = a;
        if (cr.method.empty()) cr.method = "cells";
        cr.chi_orbit = cell_orbit(comp.type, comp.rank, *eng, elt);
        if (!cr.chi_orbit.empty() && cr.chi_char.empty()) {
            const Orbit& o = data_->orbit(comp.type, cr.chi_orbit);
            cr.chi_char = o.character;
        }
    }

    // Maps a two-sided cell to its special orbit: by a-value when unique,
    // otherwise through pinned parabolic representatives.
    std::string cell_orbit(Type t, int rank, const HeckeEngine& eng, size_t elt) const {
        long long a = eng.a_value(elt);
        const RootSystem& rs = standard_system(t, rank);
        long long half = (long long)rs.num_positive();
        std::vector<const Orbit*> cands;
        for (const auto& o : data_->orbits(t))
            if (o.special && half - o.dim / 2 == a) cands.push_back(&o);
        if (cands.size() == 1) return cands[0]->label;
        struct Rep {
            Type t;
            std::vector<int> subset;
            const char* orbit;
        };
        static const Rep reps[] = {
            {Type::F4, {3, 4}, "B3"},        {Type::F4, {1, 2}, "C3"},
            {Type::F4, {2, 3, 4}, "A2"},     {Type::F4, {1, 2, 3}, "Ã2"},
            {Type::E6, {4, 5, 6}, "A4"},     {Type::E6, {1, 3, 5, 6}, "D4"},
        };
        size_t cell = eng.two_sided_cell_of(elt);
        for (const auto& r : reps) {
            if (r.t != t) continue;
            WeylWord wI = longest_element(rs, r.subset);
            if (eng.two_sided_cell_of(eng.element_of(wI)) == cell) return r.orbit;
        }
        if (cands.empty()) return "";
        throw missing_datum_error("ambiguous cell character — provide cell data");
    }

    void fill_orbit(Result& res, const std::string& label) const {
        const Orbit& o = data_->orbit(res.ambient, label);
        res.orbit.resolved = true;
        res.orbit.label = o.label;
        res.orbit.dim = o.dim;
        res.orbit.special = o.special;
        res.orbit.character = o.character;
    }

    // Weighted-Dynkin-diagram route: build the neutral element of the
    // candidate pseudo-Levi from the actual component roots, reduce it to the
    // dominant chamber and match the diagram against the decorated rows.
    int diagram_decoration(Result& res, const std::vector<DualBlock>& blocks,
                           const BCLabel& total) const {
        const RootSystem& rs = standard_system(res.ambient, res.rank);
        Vec h(rs.coordinate_dim, Rational(0));
        for (const auto& b : blocks) {
            if (!b.f->comp)
                throw missing_datum_error("decoration unresolved: no subsystem realization");
            const SubsystemComponent& comp = *b.f->comp;
            if (b.f->exceptional) {
                const auto* rep = data_->decorated_rep(comp.type, b.exc_label);
                Vec model_h;
                if (rep) {
                    model_h = detail::model_h_from_rep(*rep, *comp.model);
                } else {
                    // undecorated pure-A orbit of the model: realize it from
                    // its own partition-block recipe inside an A-subsystem...
                    throw missing_datum_error("decoration unresolved");
                }
                h = add(h, detail::pull_back(model_h, comp));
            } else {
                // very even blocks use the twisted embedding; the choice of
                // diagram automorphism is pinned against the published E8
                // worked example and recorded in the audit trail
                bool flip = is_very_even(b.q);
                if (flip)
                    note(res, "very-even embedding",
                         partition_str(b.q) + " realized through the twisted GL embedding",
                         "diagram-automorphism convention anchored to the published example");
                Vec model_h = detail::model_h_vector(b.q, comp.type, *comp.model, flip);
                h = add(h, detail::pull_back(model_h, comp));
            }
        }
        std::vector<int> diagram = weighted_dynkin_diagram(rs, h);
        std::string diag_str;
        for (size_t i = 0; i < diagram.size(); ++i)
            diag_str += (i ? "," : "") + std::to_string(diagram[i]);
        for (const auto* row : data_->decorated_rows(res.ambient, total)) {
            if (row->diagram == diagram) {
                note(res, "decoration",
                     row->pair_label + " via weighted diagram (" + diag_str + ")",
                     "saturation " + row->saturation);
                return parse_bc_label(row->pair_label).primes;
            }
        }
        throw missing_datum_error("decoration unresolved: diagram (" + diag_str + ") for " +
                                  bc_label_str(total));
    }

public:
    struct OracleOutcome {
        long long gkd_from_factors = -1;
        OrbitResult orbit;
        std::vector<AuditEntry> audit;
    };

    // Replays one appendix row: realizes the pseudo-maximal subsystem from its
    // template, rebuilds the special-representation factors and runs the full
    // d_LS + Bala-Carter + Sommers resolution.
    OracleOutcome replay_appendix_row(const AppendixRow& row) const {
        OracleOutcome out;
        const RootSystem& rs = standard_system(row.ambient, 0);
        std::vector<SubsystemComponent> comps;
        if (const auto* tmpl = data_->template_of(row.table)) {
            auto ed = extended_diagram(rs);
            for (const auto& nodes : tmpl->components) {
                std::vector<Vec> simples;
                for (int nd : nodes) simples.push_back(ed.nodes[nd]);
                auto cs = decompose_and_classify(rs, generate_subsystem(rs, simples));
                if (cs.size() != 1) throw std::logic_error("template component not irreducible");
                comps.push_back(cs[0]);
            }
        }
        std::vector<RepFactor> factors;
        std::vector<bool> used(comps.size(), false);
        long long total_a = 0;
        for (const auto& af : row.factors) {
            RepFactor f;
            f.type = af.type;
            f.rank = af.rank;
            f.short_roots = af.short_component;
            for (size_t i = 0; i < comps.size(); ++i) {
                if (used[i]) continue;
                if (comps[i].type == af.type && comps[i].rank == af.rank) {
                    f.comp = &comps[i];
                    used[i] = true;
                    break;
                }
            }
            if (af.exceptional) {
                f.exceptional = true;
                f.chi_orbit = af.orbit;
                const Orbit& o = data_->orbit(af.type, af.orbit);
                total_a += (long long)standard_system(af.type).num_positive() - o.dim / 2;
            } else {
                f.numeral = af.numeral;
                total_a += a_value_partition(af.parts, af.type);
                if (af.type == Type::A || af.type == Type::D) {
                    f.pi_dual = af.parts;
                } else {
                    // B and C partners share their odd box counts
                    Type dual = af.type == Type::B ? Type::C : Type::B;
                    int target = dual == Type::B ? 2 * af.rank + 1 : 2 * af.rank;
                    f.pi_dual = h_algorithm(af.parts, dual, target);
                }
            }
            factors.push_back(f);
        }
        out.gkd_from_factors = (long long)rs.num_positive() - total_a;

        Result res;
        res.ambient = row.ambient;
        res.rank = rs.rank;
        res.positive_count = (long long)rs.num_positive();
        res.a_resolved = true;
        res.a_value = total_a;
        res.gk_dim = row.gkd;
        res.integral = false;
        resolve_orbit(res, factors);
        out.orbit = res.orbit;
        out.audit = res.audit;
        return out;
    }

    // d_J = gcd of the extended-diagram marks outside J (§-style invariant of
    // the class of J); exposed for verification against the diagram route.
    static long long gcd_outside(const RootSystem& rs, const std::vector<int>& J_nodes) {
        auto ed = extended_diagram(rs);
        std::set<int> J(J_nodes.begin(), J_nodes.end());
        long long g = 0;
        for (size_t i = 0; i < ed.marks.size(); ++i)
            if (!J.count((int)i)) g = std::gcd(g, ed.marks[i]);
        return g;
    }
};

} // namespace orbitatlas
