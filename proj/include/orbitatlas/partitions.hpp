#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitatlas/rootdata.hpp"

namespace orbitatlas {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

inline Partition normalized(Partition p) {
    std::sort(p.begin(), p.end(), std::greater<int>());
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (int x : p)
        if (x < 0) throw std::invalid_argument("partition parts must be nonnegative");
    return p;
}

inline int partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

inline std::string partition_str(const Partition& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

inline Partition transpose(const Partition& p) {
    Partition t;
    for (int j = 1; p.empty() ? false : j <= p[0]; ++j) {
        int c = 0;
        for (int x : p)
            if (x >= j) ++c;
        t.push_back(c);
    }
    return t;
}

// Classical validity: B = odd size, even parts with even multiplicity;
// C = odd parts with even multiplicity; D = even size, even parts with even
// multiplicity.
inline bool partition_valid(const Partition& p, Type x) {
    std::map<int, int> mult;
    for (int v : p) mult[v]++;
    int size = partition_size(p);
    switch (x) {
        case Type::B:
            if (size % 2 == 0) return false;
            for (auto [v, m] : mult)
                if (v % 2 == 0 && m % 2 != 0) return false;
            return true;
        case Type::C:
            if (size % 2 != 0) return false;
            for (auto [v, m] : mult)
                if (v % 2 != 0 && m % 2 != 0) return false;
            return true;
        case Type::D:
            if (size % 2 != 0) return false;
            for (auto [v, m] : mult)
                if (v % 2 == 0 && m % 2 != 0) return false;
            return true;
        case Type::A:
            return true;
        default:
            throw std::invalid_argument("partition_valid: classical type expected");
    }
}

// p dominates q (same size): partial sums of p ≥ partial sums of q.
inline bool dominates(const Partition& p, const Partition& q) {
    long long sp = 0, sq = 0;
    size_t n = std::max(p.size(), q.size());
    for (size_t i = 0; i < n; ++i) {
        sp += i < p.size() ? p[i] : 0;
        sq += i < q.size() ? q[i] : 0;
        if (sp < sq) return false;
    }
    return true;
}

inline void enumerate_partitions(int n, const std::function<void(const Partition&)>& fn) {
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxPart) {
        if (rest == 0) {
            fn(cur);
            return;
        }
        for (int v = std::min(rest, maxPart); v >= 1; --v) {
            cur.push_back(v);
            rec(rest - v, v);
            cur.pop_back();
        }
    };
    rec(n, n);
}

// (p)_X: the largest X-valid partition dominated by p. Greedy parity repair,
// cross-checked against the dominance-maximality characterization in tests.
inline Partition collapse(Partition p, Type x) {
    p = normalized(p);
    int size = partition_size(p);
    if (x == Type::B && size % 2 == 0) throw std::domain_error("size parity invalid for type");
    if ((x == Type::C || x == Type::D) && size % 2 != 0)
        throw std::domain_error("size parity invalid for type");
    auto violates = [&](int v, int mult) {
        if (x == Type::B || x == Type::D) return v % 2 == 0 && mult % 2 != 0;
        return v % 2 != 0 && mult % 2 != 0;
    };
    for (;;) {
        std::map<int, int> mult;
        for (int v : p) mult[v]++;
        int bad = -1;
        for (auto it = mult.rbegin(); it != mult.rend(); ++it)
            if (violates(it->first, it->second)) { bad = it->first; break; }
        if (bad < 0) break;
        // last occurrence of the offending value loses a box; the box is
        // added to the next row that can absorb it
        size_t i = 0;
        while (i < p.size() && p[i] != bad) ++i;
        while (i + 1 < p.size() && p[i + 1] == bad) ++i;
        p[i] -= 1;
        size_t j = i + 1;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (j < p.size())
            p[j] += 1;
        else
            p.push_back(1);
        p = normalized(p);
    }
    return normalized(p);
}

// Reference implementation by enumeration; used as a test oracle.
inline Partition collapse_brute(const Partition& p, Type x) {
    int n = partition_size(p);
    Partition best;
    enumerate_partitions(n, [&](const Partition& q) {
        if (!partition_valid(q, x)) return;
        if (!dominates(p, q)) return;
        if (best.empty() || dominates(q, best)) best = q;
    });
    if (best.empty()) throw std::domain_error("size parity invalid for type");
    return best;
}

// d_LS(p) = (p^t)_X on type-X partitions.
inline Partition d_ls_classical(const Partition& p, Type x) {
    if (x == Type::A) return transpose(p);
    return collapse(transpose(p), x);
}

inline bool is_special_partition(const Partition& p, Type x) {
    if (x == Type::A) return true;
    if (!partition_valid(p, x)) return false;
    return d_ls_classical(d_ls_classical(p, x), x) == normalized(p);
}

inline bool is_very_even(const Partition& p) {
    std::map<int, int> mult;
    for (int v : p) {
        if (v % 2 != 0) return false;
        mult[v]++;
    }
    for (auto [v, m] : mult)
        if (m % 2 != 0) return false;
    return !p.empty();
}

// eq. boxes: row i (1-based) odd: ev = ceil(p/2), od = floor(p/2); even rows swap.
inline std::vector<int> odd_boxes(const Partition& p) {
    std::vector<int> v;
    for (size_t i = 0; i < p.size(); ++i)
        v.push_back((i + 1) % 2 == 1 ? p[i] / 2 : (p[i] + 1) / 2);
    return v;
}

inline std::vector<int> even_boxes(const Partition& p) {
    std::vector<int> v;
    for (size_t i = 0; i < p.size(); ++i)
        v.push_back((i + 1) % 2 == 1 ? (p[i] + 1) / 2 : p[i] / 2);
    return v;
}

// Lusztig a-value of a partition: Σ (i-1) p_i for type A, Σ (i-1) p_i^od for
// B/C, Σ (i-1) p_i^ev for D.
inline long long a_value_partition(const Partition& p, Type x) {
    long long a = 0;
    if (x == Type::A) {
        for (size_t i = 0; i < p.size(); ++i) a += (long long)i * p[i];
        return a;
    }
    std::vector<int> b = (x == Type::D) ? even_boxes(p) : odd_boxes(p);
    for (size_t i = 0; i < b.size(); ++i) a += (long long)i * b[i];
    return a;
}

// ----- Bala–Carter labels for classical partitions --------------------------

// A label is a multiset of simple factors ("A2", "Ã1", "D4(a1)", ...) plus a
// prime decoration count on the whole label.
struct BCLabel {
    std::map<std::string, int> factors;
    int primes = 0;

    bool empty() const { return factors.empty(); }

    void add(const std::string& f, int count = 1) {
        if (count) factors[f] += count;
    }
    void merge(const BCLabel& other) {
        for (auto& [f, c] : other.factors) factors[f] += c;
        primes = std::max(primes, other.primes);
    }

    bool operator==(const BCLabel& o) const {
        return factors == o.factors && primes == o.primes;
    }
    bool operator<(const BCLabel& o) const {
        if (factors != o.factors) return factors < o.factors;
        return primes < o.primes;
    }
};

namespace detail {

struct FactorInfo {
    int rank = 0;
    char letter = 'A';
    bool tilde = false;
    std::string inner; // "a1" in D4(a1)
};

inline FactorInfo parse_factor(const std::string& f) {
    FactorInfo fi;
    size_t i = 0;
    if (f.size() >= 2 && f.compare(0, 2, "Ã") == 0) {
        // "Ã" stands for a short-root A factor
        fi.tilde = true;
        fi.letter = 'A';
        i = 2;
    } else if (f[0] == '~') {
        fi.tilde = true;
        fi.letter = f[1];
        i = 2;
    } else {
        fi.letter = f[i++];
    }
    size_t j = i;
    while (j < f.size() && isdigit((unsigned char)f[j])) ++j;
    fi.rank = std::stoi(f.substr(i, j - i));
    if (j < f.size() && f[j] == '(') {
        size_t k = f.find(')', j);
        fi.inner = f.substr(j + 1, k - j - 1);
    }
    return fi;
}

} // namespace detail

inline std::string bc_label_str(const BCLabel& l) {
    if (l.factors.empty()) return "0";
    // order: rank descending, then letter, tilde after plain
    std::vector<std::pair<std::string, int>> fs(l.factors.begin(), l.factors.end());
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
        auto fa = detail::parse_factor(a.first), fb = detail::parse_factor(b.first);
        if (fa.rank != fb.rank) return fa.rank > fb.rank;
        if (fa.letter != fb.letter) return fa.letter > fb.letter; // E > D > C > B > A
        if (fa.tilde != fb.tilde) return !fa.tilde;
        return fa.inner < fb.inner;
    });
    std::string s;
    for (auto& [f, c] : fs) {
        if (!s.empty()) s += "+";
        if (c > 1) s += std::to_string(c);
        s += f;
    }
    if (l.primes == 1) return "(" + s + ")'";
    if (l.primes == 2) return "(" + s + ")''";
    return s;
}

// Parses "(A3+2A1)'", "2A1+Ã2", "D4(a1)+A1", "E6(a3)", "0".
inline BCLabel parse_bc_label(std::string s) {
    BCLabel l;
    // strip primes
    while (!s.empty() && s.back() == '\'') {
        l.primes++;
        s.pop_back();
    }
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s == "0" || s.empty()) return l;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t plus = s.find('+', pos);
        // '+' inside parentheses never happens in factor names
        std::string tok = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        pos = plus == std::string::npos ? s.size() : plus + 1;
        int count = 1;
        size_t i = 0;
        while (i < tok.size() && isdigit((unsigned char)tok[i])) ++i;
        if (i > 0 && i < tok.size()) {
            count = std::stoi(tok.substr(0, i));
            tok = tok.substr(i);
        }
        l.add(tok, count);
    }
    return l;
}

// Decoration style for generated labels: inside F4 the short/long distinction
// is written with a tilde; inside simply-laced ambient groups there is none.
enum class LabelStyle { SimplyLaced, F4LongComponent, F4ShortComponent };

namespace detail {

inline std::string a_factor(int k, bool tilde) {
    if (k <= 0) return "";
    return (tilde ? std::string("Ã") : std::string("A")) + std::to_string(k);
}

} // namespace detail

// Decomposes a classical partition into its Bala–Carter pieces: pairs of
// equal parts become GL factors, the remaining distinguished core is named by
// the standard rows plus the sporadic ones.
inline BCLabel bala_carter_classical(const Partition& p_in, Type x, LabelStyle style = LabelStyle::SimplyLaced) {
    Partition p = normalized(p_in);
    BCLabel label;
    bool f4 = style != LabelStyle::SimplyLaced;
    // tilde bookkeeping inside F4: pairs in a C factor are short-root GL
    // factors, pairs in B/A factors are long; bare A components carry their
    // own tag.
    bool pair_tilde = false, core_b_tilde = false;
    if (x == Type::A) {
        bool tilde = style == LabelStyle::F4LongComponent; // dual side swaps length
        for (int v : p)
            if (v >= 2) label.add(detail::a_factor(v - 1, f4 && tilde));
        return label;
    }
    if (x == Type::C) pair_tilde = f4;
    if (x == Type::B) core_b_tilde = f4;

    std::map<int, int> mult;
    for (int v : p) mult[v]++;
    std::vector<int> core;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        auto [v, m] = *it;
        bool core_parity = (x == Type::C) ? v % 2 == 0 : v % 2 != 0;
        int pairs = m / 2;
        if (m % 2 != 0) {
            if (!core_parity) throw std::domain_error("no Bala–Carter decomposition found");
            core.push_back(v);
        }
        for (int i = 0; i < pairs; ++i)
            if (v >= 2) label.add(detail::a_factor(v - 1, f4 && pair_tilde));
    }
    // core: distinct values sorted descending
    if (core.empty()) return label;
    if (x == Type::B) {
        if (core.size() == 1) {
            int k = (core[0] - 1) / 2;
            if (k == 1)
                label.add(f4 ? "Ã1" : "A1");
            else if (k >= 2)
                label.add("B" + std::to_string(k));
            // k == 0 ([1]) is the trivial orbit
        } else if (core == std::vector<int>{5, 3, 1}) {
            label.add("B4(a2)");
        } else {
            throw std::domain_error("no Bala–Carter decomposition found");
        }
        (void)core_b_tilde;
        return label;
    }
    if (x == Type::C) {
        if (core.size() == 1) {
            int k = core[0] / 2;
            if (k == 1)
                label.add("A1");
            else if (k == 2)
                label.add("B2");
            else
                label.add("C" + std::to_string(k));
        } else if (core.size() == 2) {
            int k = (core[0] + core[1]) / 2, i = core[1] / 2;
            label.add("C" + std::to_string(k) + "(a" + std::to_string(i) + ")");
        } else {
            throw std::domain_error("no Bala–Carter decomposition found");
        }
        return label;
    }
    // type D cores
    if (core.size() == 2) {
        int a = core[0], b = core[1];
        int k = (a + b) / 2;
        if (b == 1) {
            if (k == 2)
                label.add("A1", 2);
            else if (k == 3)
                label.add("A3");
            else
                label.add("D" + std::to_string(k));
        } else {
            label.add("D" + std::to_string(k) + "(a" + std::to_string((b - 1) / 2) + ")");
        }
        return label;
    }
    if (core == std::vector<int>{7, 5, 3, 1}) {
        label.add("D8(a5)");
        return label;
    }
    throw std::domain_error("no Bala–Carter decomposition found");
}

// ----- very even numerals ---------------------------------------------------

enum class Numeral { None, I, II };

enum class NumeralConvention { Roman, Lusztig, GP, PyCox, CM, Alvis };

// Table of conventions for the two very even orbits of so(2n).
inline std::string very_even_numeral(const Partition& p, Numeral numeral,
                                     NumeralConvention conv) {
    if (numeral == Numeral::None || !is_very_even(p))
        throw std::domain_error("numeral undefined");
    int n = partition_size(p) / 2;
    bool first = numeral == Numeral::I;
    switch (conv) {
        case NumeralConvention::Roman: return first ? "I" : "II";
        case NumeralConvention::Lusztig: return first ? "π'" : "π''";
        case NumeralConvention::GP: return first ? "([u],+)" : "([u],-)";
        case NumeralConvention::PyCox: return first ? "([u],-)" : "([u],+)";
        case NumeralConvention::CM:
            if (n % 4 == 0) return first ? "O^I" : "O^II";
            return first ? "O^II" : "O^I";
        case NumeralConvention::Alvis:
            if (n % 4 == 0) return first ? "([u],[u])+" : "([u],[u])-";
            return first ? "([u],[u])-" : "([u],[u])+";
    }
    throw std::domain_error("numeral undefined");
}

} // namespace orbitatlas
