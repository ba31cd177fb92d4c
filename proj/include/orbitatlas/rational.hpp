#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitatlas {

// Exact rational arithmetic on 64-bit components with 128-bit intermediates.
// Every value is kept reduced with a positive denominator, so equality is
// bitwise and hashing is safe.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    long long to_integer() const {
        if (den_ != 1) throw std::domain_error("Rational: not an integer: " + str());
        return num_;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return make128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = (__int128)a.num_ * b.den_;
        __int128 rhs = (__int128)b.num_ * a.den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    // Accepts "7", "-3/4" and decimal literals like "4.5" (converted exactly).
    static Rational parse(std::string_view s) {
        size_t slash = s.find('/');
        if (slash != std::string_view::npos) {
            long long n = parse_int(s.substr(0, slash));
            long long d = parse_int(s.substr(slash + 1));
            return Rational(n, d);
        }
        size_t dot = s.find('.');
        if (dot != std::string_view::npos) {
            std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
            if (frac.empty()) return Rational(parse_int(whole));
            bool neg = !whole.empty() && whole.front() == '-';
            long long w = whole.empty() || whole == "-" || whole == "+" ? 0 : parse_int(whole);
            long long den = 1;
            for (size_t i = 0; i < frac.size(); ++i) {
                if (frac[i] < '0' || frac[i] > '9')
                    throw std::invalid_argument("Rational: bad literal '" + std::string(s) + "'");
                den = checked_mul(den, 10);
            }
            long long f = parse_int(frac);
            __int128 n = (__int128)(w < 0 ? -w : w) * den + f;
            if (neg || w < 0) n = -n;
            return make128(n, den);
        }
        return Rational(parse_int(s));
    }

    size_t hash() const {
        return std::hash<long long>()(num_) * 1000003u ^ std::hash<long long>()(den_);
    }

private:
    long long num_;
    long long den_;

    void assign(long long n, long long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = n;
        den_ = d;
    }

    static Rational make128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        // binary gcd on __int128
        __int128 b = d;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lo = -(((__int128)1) << 62), hi = ((__int128)1) << 62;
        if (n <= lo || n >= hi || d >= hi)
            throw std::overflow_error("Rational: magnitude overflow");
        Rational r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }

    static long long checked_mul(long long a, long long b) {
        __int128 p = (__int128)a * b;
        if (p > INT64_MAX / 2) throw std::overflow_error("Rational: literal too long");
        return (long long)p;
    }

    static long long parse_int(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty literal");
        bool neg = false;
        size_t i = 0;
        if (s[0] == '+' || s[0] == '-') { neg = s[0] == '-'; i = 1; }
        if (i == s.size()) throw std::invalid_argument("Rational: bad literal '" + std::string(s) + "'");
        long long v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("Rational: bad literal '" + std::string(s) + "'");
            v = checked_mul(v, 10) + (s[i] - '0');
        }
        return neg ? -v : v;
    }
};

inline Rational operator""_q(unsigned long long v) { return Rational((long long)v); }

} // namespace orbitatlas

template <> struct std::hash<orbitatlas::Rational> {
    size_t operator()(const orbitatlas::Rational& r) const { return r.hash(); }
};
