#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "orbitatlas/rootdata.hpp"
#include "orbitatlas/weyl.hpp"

namespace orbitatlas {

// Laurent polynomials in q with integer coefficients and exponents <= 0,
// stored as coeff[i] = coefficient of q^{-i}. This covers every polynomial
// appearing in the KL recursion in this normalization.
using KLPoly = std::vector<long long>;

namespace detail {

inline void kl_add(KLPoly& a, const KLPoly& b, long long factor, int shift) {
    // a += factor * b * q^{-shift}; shift may be -1 (multiplication by q)
    for (size_t i = 0; i < b.size(); ++i) {
        int idx = (int)i + shift;
        if (b[i] == 0) continue;
        if (idx < 0) throw std::logic_error("kl: positive exponent");
        if ((size_t)idx >= a.size()) a.resize(idx + 1, 0);
        a[idx] += factor * b[i];
    }
}

inline void kl_trim(KLPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

struct VecHash {
    size_t operator()(const std::vector<int32_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (int32_t x : v) {
            h ^= (size_t)(uint32_t)x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace detail

// Bounded-rank Hecke-algebra engine: enumerates the Weyl group of a Cartan
// matrix, computes the Kazhdan-Lusztig basis (quadratic relation
// (T_s+q^{-1})(T_s-q)=0, C_w bar-invariant and ≡ T_w below degree zero),
// Lusztig's a-function and the two-sided cells.
//
// Construction is single-writer; after the constructor returns the object is
// immutable and queries are thread-safe.
class HeckeEngine {
public:
    explicit HeckeEngine(std::vector<std::vector<long long>> cartan, size_t max_order = 10080)
        : cartan_(std::move(cartan)), rank_((int)cartan_.size()) {
        enumerate(max_order);
        build_kl();
        build_cells();
    }

    size_t order() const { return n_; }
    int rank() const { return rank_; }
    size_t length(size_t w) const { return length_[w]; }
    size_t longest_element_index() const { return w0_; }

    // element of a word (letters 1-based); identity is index 0
    size_t element_of(const WeylWord& w) const {
        size_t cur = 0;
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
            cur = left_[(*it - 1) * n_ + cur];
        return cur;
    }

    size_t inverse(size_t w) const { return inv_[w]; }
    size_t mult_right(size_t w, int s) const { return inv_[left_[(s - 1) * n_ + inv_[w]]]; }

    long long a_value(size_t w) const { return cell_a_[two_sided_of_[w]]; }
    long long a_value(const WeylWord& w) const { return a_value(element_of(w)); }

    size_t num_two_sided_cells() const { return cell_a_.size(); }
    size_t two_sided_cell_of(size_t w) const { return two_sided_of_[w]; }
    const std::vector<std::vector<int32_t>>& two_sided_cells() const { return cells_; }
    long long cell_a(size_t cell) const { return cell_a_[cell]; }

    // members of the unique-reduced-expression cell 𝒞 (excluding e) and 𝒞w0
    std::vector<int32_t> unique_expression_cell() const {
        std::vector<long long> nred(n_, 0);
        std::vector<int32_t> by_len(n_);
        std::iota(by_len.begin(), by_len.end(), 0);
        std::sort(by_len.begin(), by_len.end(),
                  [&](int32_t a, int32_t b) { return length_[a] < length_[b]; });
        std::vector<int32_t> out;
        for (int32_t w : by_len) {
            if (w == 0) { nred[w] = 1; continue; }
            for (int s = 1; s <= rank_; ++s) {
                size_t ws = mult_right(w, s);
                if (length_[ws] < length_[w]) nred[w] += nred[ws];
            }
            if (nred[w] == 1) out.push_back(w);
        }
        return out;
    }

    // words for reporting
    WeylWord word_of(size_t w) const {
        WeylWord out;
        while (w != 0) {
            out.letters.push_back(letter_[w]);
            w = parent_[w];
        }
        return out;
    }

    // h_{e,w} degree data: Δ(w) = ℓ(w) - 2 deg P_{e,w}
    long long delta(size_t w) const { return delta_[w]; }

    // KL basis rows, exposed for verification: pairs (y, h_{y,w})
    const std::vector<std::pair<int32_t, KLPoly>>& row(size_t w) const { return rows_[w]; }

    const std::vector<std::pair<int32_t, long long>>& mu_list(size_t w) const { return mu_[w]; }

private:
    std::vector<std::vector<long long>> cartan_;
    int rank_;
    size_t n_ = 0;
    size_t w0_ = 0;
    std::vector<int32_t> left_;    // left_[s*n + w] = s·w
    std::vector<int32_t> parent_, inv_;
    std::vector<int16_t> letter_;
    std::vector<int32_t> length_;
    std::vector<uint32_t> ldesc_;  // bitmask of left descents
    std::vector<std::vector<std::pair<int32_t, KLPoly>>> rows_;
    std::vector<std::vector<std::pair<int32_t, long long>>> mu_;
    std::vector<long long> delta_;
    std::vector<int32_t> two_sided_of_;
    std::vector<std::vector<int32_t>> cells_;
    std::vector<long long> cell_a_;

    void enumerate(size_t max_order) {
        std::unordered_map<std::vector<int32_t>, int32_t, detail::VecHash> index;
        std::vector<std::vector<int32_t>> sigs;
        std::vector<int32_t> rho(rank_, 1);
        index.emplace(rho, 0);
        sigs.push_back(rho);
        parent_.push_back(0);
        letter_.push_back(0);
        length_.push_back(0);
        for (size_t head = 0; head < sigs.size(); ++head) {
            for (int s = 0; s < rank_; ++s) {
                std::vector<int32_t> img = sigs[head];
                int32_t ks = img[s];
                for (int j = 0; j < rank_; ++j) img[j] -= ks * (int32_t)cartan_[s][j];
                auto [it, fresh] = index.emplace(img, (int32_t)sigs.size());
                if (fresh) {
                    sigs.push_back(img);
                    parent_.push_back((int32_t)head);
                    letter_.push_back((int16_t)(s + 1));
                    length_.push_back(length_[head] + 1);
                    if (sigs.size() > max_order)
                        throw std::domain_error(
                            "cell engine bounded; supply precomputed cell data");
                }
            }
        }
        n_ = sigs.size();
        left_.assign((size_t)rank_ * n_, 0);
        for (size_t w = 0; w < n_; ++w) {
            for (int s = 0; s < rank_; ++s) {
                std::vector<int32_t> img = sigs[w];
                int32_t ks = img[s];
                for (int j = 0; j < rank_; ++j) img[j] -= ks * (int32_t)cartan_[s][j];
                left_[(size_t)s * n_ + w] = index.at(img);
            }
        }
        // inverses: w = s_{a_k}···s_{a_1} along the parent chain, so applying
        // a_k, ..., a_1 in that temporal order to ρ evaluates w^{-1}(ρ)
        inv_.assign(n_, 0);
        for (size_t w = 0; w < n_; ++w) {
            std::vector<int32_t> img = rho;
            for (size_t cur = w; cur != 0; cur = parent_[cur]) {
                int s = letter_[cur] - 1;
                int32_t ks = img[s];
                for (int j = 0; j < rank_; ++j) img[j] -= ks * (int32_t)cartan_[s][j];
            }
            inv_[w] = index.at(img);
        }
        ldesc_.assign(n_, 0);
        for (size_t w = 0; w < n_; ++w)
            for (int s = 0; s < rank_; ++s)
                if (length_[left_[(size_t)s * n_ + w]] < length_[w]) ldesc_[w] |= 1u << s;
        w0_ = 0;
        for (size_t w = 0; w < n_; ++w)
            if (length_[w] > length_[w0_]) w0_ = w;
    }

    void build_kl() {
        std::vector<int32_t> by_len(n_);
        std::iota(by_len.begin(), by_len.end(), 0);
        std::stable_sort(by_len.begin(), by_len.end(),
                         [&](int32_t a, int32_t b) { return length_[a] < length_[b]; });
        rows_.resize(n_);
        mu_.resize(n_);
        delta_.assign(n_, 0);
        std::unordered_map<int32_t, KLPoly> acc;
        for (int32_t w : by_len) {
            if (w == 0) {
                rows_[0] = {{0, KLPoly{1}}};
                delta_[0] = 0;
                continue;
            }
            int s = letter_[w] - 1;
            int32_t u = parent_[w];
            acc.clear();
            for (const auto& [y, h] : rows_[u]) {
                int32_t sy = left_[(size_t)s * n_ + y];
                bool ascends = length_[sy] > length_[y];
                detail::kl_add(acc[sy], h, 1, 0);
                detail::kl_add(acc[y], h, 1, ascends ? 1 : -1);
            }
            for (const auto& [z, mu] : mu_[u]) {
                if (!(ldesc_[z] >> s & 1)) continue;
                for (const auto& [y, h] : rows_[z]) detail::kl_add(acc[y], h, -mu, 0);
            }
            auto& row = rows_[w];
            row.reserve(acc.size());
            for (auto& [y, h] : acc) {
                detail::kl_trim(h);
                if (!h.empty()) row.emplace_back(y, std::move(h));
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [y, h] : row) {
                if (y != w && h.size() >= 2 && h[1] != 0) mu_[w].emplace_back(y, h[1]);
                if (y == 0) {
                    size_t j = 0;
                    while (h[j] == 0) ++j;
                    delta_[w] = (long long)j;
                }
                if (y == w && (h.size() != 1 || h[0] != 1))
                    throw std::logic_error("kl: diagonal not normalized");
                if (y != w && !h.empty() && h[0] != 0)
                    throw std::logic_error("kl: degree bound violated");
            }
        }
    }

    void build_cells() {
        // left preorder edges: w ⇒ x means x ≤_L w
        std::vector<std::vector<int32_t>> ledge(n_);
        for (size_t w = 0; w < n_; ++w) {
            uint32_t asc = ~ldesc_[w];
            for (int s = 0; s < rank_; ++s)
                if (asc >> s & 1) ledge[w].push_back(left_[(size_t)s * n_ + w]);
            for (const auto& [y, mu] : mu_[w])
                if (ldesc_[y] & asc) ledge[w].push_back(y);
        }
        // two-sided: union with the inverse-transported edges
        std::vector<std::vector<int32_t>> edge(n_);
        for (size_t w = 0; w < n_; ++w) {
            edge[w] = ledge[w];
            for (int32_t t : ledge[inv_[w]]) edge[w].push_back(inv_[t]);
        }
        two_sided_of_ = scc(edge);
        size_t ncell = 0;
        for (auto c : two_sided_of_) ncell = std::max(ncell, (size_t)c + 1);
        cells_.assign(ncell, {});
        for (size_t w = 0; w < n_; ++w) cells_[two_sided_of_[w]].push_back((int32_t)w);

        // a on a two-sided cell = min Δ over any of its left cells; compute
        // per left cell and check consistency across the two-sided cell.
        auto left_of = scc(ledge);
        size_t nleft = 0;
        for (auto c : left_of) nleft = std::max(nleft, (size_t)c + 1);
        std::vector<long long> left_min(nleft, LLONG_MAX);
        for (size_t w = 0; w < n_; ++w)
            left_min[left_of[w]] = std::min(left_min[left_of[w]], delta_[w]);
        cell_a_.assign(ncell, -1);
        for (size_t w = 0; w < n_; ++w) {
            long long a = left_min[left_of[w]];
            if (cell_a_[two_sided_of_[w]] < 0)
                cell_a_[two_sided_of_[w]] = a;
            else if (cell_a_[two_sided_of_[w]] != a)
                throw std::logic_error("kl: a-function not constant on a two-sided cell");
        }
    }

    // iterative Tarjan
    std::vector<int32_t> scc(const std::vector<std::vector<int32_t>>& edge) const {
        std::vector<int32_t> comp(n_, -1), low(n_), num(n_, -1), stk;
        std::vector<uint8_t> on(n_, 0);
        int32_t counter = 0, ncomp = 0;
        struct Frame { int32_t v; size_t ei; };
        std::vector<Frame> call;
        for (size_t root = 0; root < n_; ++root) {
            if (num[root] >= 0) continue;
            call.push_back({(int32_t)root, 0});
            while (!call.empty()) {
                auto& fr = call.back();
                int32_t v = fr.v;
                if (fr.ei == 0) {
                    num[v] = low[v] = counter++;
                    stk.push_back(v);
                    on[v] = 1;
                }
                bool descended = false;
                while (fr.ei < edge[v].size()) {
                    int32_t t = edge[v][fr.ei++];
                    if (num[t] < 0) {
                        call.push_back({t, 0});
                        descended = true;
                        break;
                    }
                    if (on[t]) low[v] = std::min(low[v], num[t]);
                }
                if (descended) continue;
                if (low[v] == num[v]) {
                    for (;;) {
                        int32_t t = stk.back();
                        stk.pop_back();
                        on[t] = 0;
                        comp[t] = ncomp;
                        if (t == v) break;
                    }
                    ++ncomp;
                }
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
        return comp;
    }
};

// ----- precomputed cell data for large groups --------------------------------

// Line format: group<TAB>word(comma-separated PyCox letters)<TAB>a<TAB>character<TAB>orbit
// '#' starts a comment; '-' marks an unknown character/orbit field.
struct CellDatum {
    long long a = -1;
    std::string character; // PyCox-style name
    std::string orbit;     // Bala-Carter label
};

class CellDataFile {
public:
    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cell data: cannot open " + path);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            parse_line(line, path, lineno);
        }
    }

    void load_text(const std::string& text, const std::string& name = "<memory>") {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            parse_line(line, name, lineno);
        }
    }

    bool empty() const { return table_.empty(); }

    // Looks up a word (1-based Bourbaki letters) in the named group; keys are
    // element signatures, so any word for the same element matches.
    const CellDatum* find(const std::string& group, const WeylWord& w) const {
        int rank = 0;
        Type t = parse_type(group, rank);
        const auto& rs = standard_system(t, rank);
        auto it = table_.find(group + "|" + signature(w, rs.cartan));
        return it == table_.end() ? nullptr : &it->second;
    }

    static std::string signature(const WeylWord& w, const std::vector<std::vector<long long>>& cartan) {
        int rank = (int)cartan.size();
        std::vector<long long> k(rank, 1);
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
            int s = *it - 1;
            long long ks = k[s];
            for (int j = 0; j < rank; ++j) k[j] -= ks * cartan[s][j];
        }
        std::string sig;
        for (long long v : k) sig += std::to_string(v) + ",";
        return sig;
    }

    // PyCox letters are 0-based; for B/C/D the published convention writes
    // [n-i_1, ..., n-i_k] for s_{i_1}...s_{i_k}.
    static WeylWord word_from_pycox(const std::string& csv, Type t, int rank) {
        WeylWord w;
        std::stringstream ss(csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            int v = std::stoi(tok);
            if (t == Type::B || t == Type::C || t == Type::D)
                w.letters.push_back(rank - v);
            else
                w.letters.push_back(v + 1);
        }
        return w;
    }

private:
    std::unordered_map<std::string, CellDatum> table_;

    void parse_line(const std::string& line, const std::string& src, int lineno) {
        std::string s = line;
        if (auto pos = s.find('#'); pos != std::string::npos) s = s.substr(0, pos);
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
        if (s.empty()) return;
        std::vector<std::string> fields;
        std::stringstream ss(s);
        std::string f;
        while (std::getline(ss, f, '\t')) fields.push_back(f);
        if (fields.size() != 5)
            throw std::runtime_error(src + ":" + std::to_string(lineno) +
                                     ": cell data: expected 5 tab-separated fields");
        int rank = 0;
        Type t;
        try {
            t = parse_type(fields[0], rank);
        } catch (const std::exception&) {
            throw std::runtime_error(src + ":" + std::to_string(lineno) +
                                     ": cell data: unknown group '" + fields[0] + "'");
        }
        const auto& rs = standard_system(t, rank);
        WeylWord w;
        try {
            w = word_from_pycox(fields[1], t, rank);
        } catch (const std::exception&) {
            throw std::runtime_error(src + ":" + std::to_string(lineno) +
                                     ": cell data: bad word '" + fields[1] + "'");
        }
        for (int letter : w.letters)
            if (letter < 1 || letter > rank)
                throw std::runtime_error(src + ":" + std::to_string(lineno) +
                                         ": cell data: letter out of range");
        CellDatum d;
        try {
            d.a = std::stoll(fields[2]);
        } catch (const std::exception&) {
            throw std::runtime_error(src + ":" + std::to_string(lineno) +
                                     ": cell data: bad a-value '" + fields[2] + "'");
        }
        if (fields[3] != "-") d.character = fields[3];
        if (fields[4] != "-") d.orbit = fields[4];
        table_[type_name(t, rank) + "|" + signature(w, rs.cartan)] = d;
    }
};

} // namespace orbitatlas
