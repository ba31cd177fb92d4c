#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitatlas/appendix_data.hpp"
#include "orbitatlas/partitions.hpp"
#include "orbitatlas/rootdata.hpp"
#include "orbitatlas/tables_data.hpp"

namespace orbitatlas {

struct Orbit {
    Type ambient;
    std::string label;
    long long dim = 0;
    bool special = false;
    std::string character; // PyCox-style name, may be empty
    std::string alt_name;  // alternate (Carter/Alvis) name, may be empty
};

struct DecoratedRow {
    std::string pair_label;      // canonical pseudo-Levi label, possibly primed
    std::string saturation;      // Bala-Carter label of the saturation
    std::vector<int> diagram;    // weighted Dynkin diagram of the saturation
};

struct AppendixFactor {
    bool exceptional = false;
    Type type = Type::A;
    int rank = 0;
    bool short_component = false;
    Partition parts;             // classical factors
    Numeral numeral = Numeral::None;
    std::string orbit;           // exceptional factors: special orbit label
};

struct AppendixRow {
    std::string table;
    Type ambient;
    int gkd = 0;
    std::vector<AppendixFactor> factors;
    std::string orbit;
};

inline std::string normalize_label(const std::string& s) {
    return bc_label_str(parse_bc_label(s));
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

inline std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (auto& t : split(s, ','))
        if (!t.empty()) out.push_back(std::stoi(t));
    return out;
}

} // namespace detail

// Immutable bundle of the embedded reference tables, extendable with
// supplement files. The process-wide default instance is `orbit_data()`.
class OrbitData {
public:
    OrbitData() {
        parse_catalog(data::kOrbitCatalog);
        parse_lsdual(data::kLsDualExceptional);
        parse_sommers(data::kSommers);
        parse_decorated(data::kDecoratedDiagrams);
        parse_ambiguous(data::kAmbiguousLabels);
        parse_reps(data::kDecoratedReps);
        parse_templates(data::kTemplates);
        parse_avalues(data::kAValues);
        parse_appendix(data::kAppendix);
        validate();
    }

    // ----- orbit catalog -----------------------------------------------------

    const std::vector<Orbit>& orbits(Type ambient) const { return catalog_.at(key(ambient)); }

    const Orbit& orbit(Type ambient, const std::string& label) const {
        auto it = by_label_.find(key(ambient) + "|" + normalize_label(label));
        if (it == by_label_.end())
            throw std::domain_error("unknown nilpotent orbit " + label + " in " + key(ambient));
        return *it->second;
    }

    bool has_orbit(Type ambient, const std::string& label) const {
        return by_label_.count(key(ambient) + "|" + normalize_label(label)) > 0;
    }

    std::vector<const Orbit*> orbits_by_dim(Type ambient, long long dim) const {
        std::vector<const Orbit*> out;
        for (const auto& o : orbits(ambient))
            if (o.dim == dim) out.push_back(&o);
        return out;
    }

    std::vector<const Orbit*> special_orbits_by_dim(Type ambient, long long dim) const {
        std::vector<const Orbit*> out;
        for (const auto& o : orbits(ambient))
            if (o.dim == dim && o.special) out.push_back(&o);
        return out;
    }

    const std::string& springer_char(Type ambient, const std::string& label) const {
        const Orbit& o = orbit(ambient, label);
        if (o.character.empty()) throw std::domain_error("character undefined");
        return o.character;
    }

    const Orbit& orbit_of_char(Type ambient, const std::string& character) const {
        auto it = by_char_.find(key(ambient) + "|" + character);
        if (it == by_char_.end())
            throw std::domain_error("character " + character + " unknown in " + key(ambient));
        return *it->second;
    }

    // ----- dualities ----------------------------------------------------------

    std::string sommers_dual(Type ambient, const std::string& pair_label) const {
        auto it = sommers_.find(key(ambient) + "|" + normalize_label(pair_label));
        if (it == sommers_.end())
            throw std::domain_error("Sommers datum missing: " + normalize_label(pair_label) +
                                    " in " + key(ambient));
        return it->second;
    }

    bool has_sommers(Type ambient, const std::string& pair_label) const {
        return sommers_.count(key(ambient) + "|" + normalize_label(pair_label)) > 0;
    }

    std::string ls_dual_exceptional(Type group, const std::string& orbit_label) const {
        auto it = lsdual_.find(key(group) + "|" + normalize_label(orbit_label));
        if (it == lsdual_.end())
            throw std::domain_error("LS datum missing: " + orbit_label + " in " + key(group));
        return it->second;
    }

    // ----- decoration support -------------------------------------------------

    bool is_ambiguous_label(Type ambient, const BCLabel& label) const {
        BCLabel undecorated = label;
        undecorated.primes = 0;
        auto amb = ambiguous_.find(key(ambient));
        if (amb == ambiguous_.end()) return false;
        for (const auto& l : amb->second)
            if (l == bc_label_str(undecorated)) return true;
        return false;
    }

    // rows of the decorated-diagram tables matching the undecorated label
    std::vector<const DecoratedRow*> decorated_rows(Type ambient, const BCLabel& label) const {
        std::vector<const DecoratedRow*> out;
        BCLabel undec = label;
        undec.primes = 0;
        std::string want = bc_label_str(undec);
        auto it = decorated_.find(key(ambient));
        if (it == decorated_.end()) return out;
        for (const auto& row : it->second) {
            BCLabel rl = parse_bc_label(row.pair_label);
            rl.primes = 0;
            if (bc_label_str(rl) == want) out.push_back(&row);
        }
        return out;
    }

    // representative of a decorated pseudo-Levi class inside a standard model,
    // as extended-diagram node subsets per component
    const std::vector<std::vector<int>>* decorated_rep(Type model, const std::string& label) const {
        auto it = reps_.find(key(model) + "|" + normalize_label(label));
        return it == reps_.end() ? nullptr : &it->second;
    }

    // ----- appendix oracle ----------------------------------------------------

    struct TemplateSpec {
        Type ambient;
        std::vector<std::vector<int>> components; // extended-diagram node ids
    };

    const TemplateSpec* template_of(const std::string& table_id) const {
        auto it = templates_.find(table_id);
        return it == templates_.end() ? nullptr : &it->second;
    }

    const std::vector<AppendixRow>& appendix() const { return appendix_; }

    std::vector<const AppendixRow*> appendix_table(const std::string& table_id) const {
        std::vector<const AppendixRow*> out;
        for (const auto& r : appendix_)
            if (r.table == table_id) out.push_back(&r);
        if (out.empty()) throw std::domain_error("unknown appendix table " + table_id);
        return out;
    }

    struct AValueRow {
        Type type;
        int rank;
        Partition partition;
        long long a;
    };
    const std::vector<AValueRow>& a_value_rows() const { return avalues_; }

    // ----- supplements ----------------------------------------------------------

    // External files share the TSV framing and must start with a `source=` line.
    // Rows: lsdual<TAB>group<TAB>orbit<TAB>dual
    //       sommers<TAB>ambient<TAB>pair<TAB>orbit
    //       wdd<TAB>ambient<TAB>pair<TAB>saturation<TAB>diagram
    void load_supplement(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("supplement: cannot open " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        load_supplement_text(ss.str(), path);
    }

    void load_supplement_text(const std::string& text, const std::string& src = "<memory>") {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        bool header_seen = false;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto pos = line.find('#'); pos != std::string::npos) line = line.substr(0, pos);
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            if (!header_seen) {
                if (line.rfind("source=", 0) != 0)
                    throw std::runtime_error(src + ":" + std::to_string(lineno) +
                                             ": supplement requires a source= header");
                header_seen = true;
                continue;
            }
            auto f = detail::split(line, '\t');
            int rank = 0;
            if (f[0] == "lsdual" && f.size() == 4) {
                lsdual_[key(parse_type(f[1], rank)) + "|" + normalize_label(f[2])] =
                    normalize_label(f[3]);
            } else if (f[0] == "sommers" && f.size() == 4) {
                insert_sommers(parse_type(f[1], rank), f[2], f[3], src, lineno);
            } else if (f[0] == "wdd" && f.size() == 5) {
                decorated_[key(parse_type(f[1], rank))].push_back(
                    {normalize_label(f[2]), normalize_label(f[3]), detail::parse_ints(f[4])});
            } else {
                throw std::runtime_error(src + ":" + std::to_string(lineno) +
                                         ": supplement: unknown row kind");
            }
        }
    }

private:
    static std::string key(Type t) {
        switch (t) {
            case Type::G2: return "G2";
            case Type::F4: return "F4";
            case Type::E6: return "E6";
            case Type::E7: return "E7";
            case Type::E8: return "E8";
            default: return "?";
        }
    }

    std::map<std::string, std::vector<Orbit>> catalog_;
    std::map<std::string, const Orbit*> by_label_;
    std::map<std::string, const Orbit*> by_char_;
    std::map<std::string, std::string> sommers_;
    std::map<std::string, std::string> lsdual_;
    std::map<std::string, std::vector<DecoratedRow>> decorated_;
    std::map<std::string, std::vector<std::string>> ambiguous_;
    std::map<std::string, std::vector<std::vector<int>>> reps_;
    std::map<std::string, TemplateSpec> templates_;
    std::vector<AValueRow> avalues_;
    std::vector<AppendixRow> appendix_;

    static std::vector<std::vector<std::string>> rows_of(const char* text) {
        std::vector<std::vector<std::string>> out;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (auto pos = line.find('#'); pos != std::string::npos) line = line.substr(0, pos);
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            out.push_back(detail::split(line, '\t'));
        }
        return out;
    }

    void parse_catalog(const char* text) {
        for (auto& f : rows_of(text)) {
            if (f.size() != 6) throw std::logic_error("orbit catalog row malformed");
            int rank = 0;
            Type t = parse_type(f[0], rank);
            catalog_[key(t)].push_back(
                {t, f[1], std::stoll(f[2]), f[3] == "1", f[4] == "-" ? "" : f[4],
                 f[5] == "-" ? "" : f[5]});
        }
        for (auto& [amb, orbits] : catalog_) {
            for (auto& o : orbits) {
                by_label_[amb + "|" + normalize_label(o.label)] = &o;
                if (!o.character.empty()) by_char_[amb + "|" + o.character] = &o;
            }
        }
    }

    void parse_lsdual(const char* text) {
        for (auto& f : rows_of(text)) {
            int rank = 0;
            lsdual_[key(parse_type(f[0], rank)) + "|" + normalize_label(f[1])] =
                normalize_label(f[2]);
        }
    }

    void insert_sommers(Type ambient, const std::string& k, const std::string& v,
                        const std::string& src, int lineno) {
        std::string kk = key(ambient) + "|" + normalize_label(k);
        std::string vv = normalize_label(v);
        auto [it, fresh] = sommers_.emplace(kk, vv);
        if (!fresh && it->second != vv)
            throw std::runtime_error(src + ":" + std::to_string(lineno) +
                                     ": conflicting Sommers entries for " + kk);
    }

    void parse_sommers(const char* text) {
        int lineno = 0;
        for (auto& f : rows_of(text)) {
            ++lineno;
            int rank = 0;
            insert_sommers(parse_type(f[0], rank), f[1], f[2], "<builtin>", lineno);
        }
    }

    void parse_decorated(const char* text) {
        for (auto& f : rows_of(text)) {
            int rank = 0;
            decorated_[key(parse_type(f[0], rank))].push_back(
                {normalize_label(f[1]), normalize_label(f[2]), detail::parse_ints(f[3])});
        }
    }

    void parse_ambiguous(const char* text) {
        for (auto& f : rows_of(text)) {
            int rank = 0;
            ambiguous_[key(parse_type(f[0], rank))].push_back(normalize_label(f[1]));
        }
    }

    void parse_reps(const char* text) {
        for (auto& f : rows_of(text)) {
            int rank = 0;
            std::vector<std::vector<int>> comps;
            for (auto& c : detail::split(f[2], ';')) comps.push_back(detail::parse_ints(c));
            reps_[key(parse_type(f[0], rank)) + "|" + normalize_label(f[1])] = comps;
        }
    }

    void parse_templates(const char* text) {
        for (auto& f : rows_of(text)) {
            int rank = 0;
            TemplateSpec spec;
            spec.ambient = parse_type(f[1], rank);
            for (auto& c : detail::split(f[2], ';'))
                spec.components.push_back(detail::parse_ints(c));
            templates_[f[0]] = spec;
        }
    }

    void parse_avalues(const char* text) {
        for (auto& f : rows_of(text)) {
            int rank = std::stoi(f[1]);
            Type t = f[0] == "A"   ? Type::A
                     : f[0] == "B" ? Type::B
                     : f[0] == "C" ? Type::C
                                   : Type::D;
            Partition p;
            for (int v : detail::parse_ints(f[2])) p.push_back(v);
            avalues_.push_back({t, rank, p, std::stoll(f[3])});
        }
    }

    static AppendixFactor parse_factor_spec(const std::string& spec) {
        AppendixFactor f;
        if (spec.rfind("@", 0) == 0) {
            auto mid = spec.find(':');
            f.exceptional = true;
            int rank = 0;
            f.type = parse_type(spec.substr(1, mid - 1), rank);
            f.rank = rank;
            f.orbit = spec.substr(mid + 1);
            return f;
        }
        auto parts = detail::split(spec, ':');
        std::string head = parts[0];
        if (!head.empty() && head.back() == '~') {
            f.short_component = true;
            head.pop_back();
        }
        int rank = 0;
        f.type = parse_type(head, rank);
        f.rank = rank;
        for (int v : detail::parse_ints(parts[1])) f.parts.push_back(v);
        if (parts.size() > 2) f.numeral = parts[2] == "I" ? Numeral::I : Numeral::II;
        return f;
    }

    void parse_appendix(const char* text) {
        for (auto& f : rows_of(text)) {
            AppendixRow row;
            row.table = f[0];
            int rank = 0;
            row.ambient = parse_type(f[1], rank);
            row.gkd = std::stoi(f[2]);
            for (auto& spec : detail::split(f[3], '|')) row.factors.push_back(parse_factor_spec(spec));
            row.orbit = normalize_label(f[4]);
            appendix_.push_back(row);
        }
    }

    void validate() const {
        // every Sommers output and appendix final orbit must resolve in the catalog
        for (const auto& [k, v] : sommers_) {
            std::string amb = k.substr(0, 2);
            if (!by_label_.count(amb + "|" + v))
                throw std::logic_error("Sommers output not in catalog: " + v + " in " + amb);
        }
        for (const auto& row : appendix_) {
            const Orbit& o = orbit(row.ambient, row.orbit);
            if (o.dim != 2ll * row.gkd)
                throw std::logic_error("appendix row violates dim = 2 GKdim: " + row.table +
                                       " gkd " + std::to_string(row.gkd) + " orbit " + row.orbit);
        }
        for (const auto& [k, v] : lsdual_) {
            std::string amb = k.substr(0, 2);
            if (!by_label_.count(amb + "|" + v))
                throw std::logic_error("LS dual output not in catalog: " + v);
        }
    }
};

inline const OrbitData& orbit_data() {
    static OrbitData instance;
    return instance;
}

} // namespace orbitatlas
