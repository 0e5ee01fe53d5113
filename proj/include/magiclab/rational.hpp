#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace magiclab {

// Exact rational arithmetic on 64-bit storage with 128-bit intermediates.
// Values are kept reduced with a positive denominator. Any result whose
// reduced numerator or denominator no longer fits in 64 bits throws
// std::overflow_error instead of silently wrapping; the quantities this
// project manipulates (kernel vectors, distance-polynomial coefficients,
// minors of small 0/1 matrices) stay far below that bound.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { *this = normalize(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { Rational r; r.num_ = -num_; r.den_ = den_; return r; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return normalize((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                         (__int128)a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return normalize((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return normalize((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }

    // "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

private:
    static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
        while (b != 0) { unsigned __int128 t = a % b; a = b; b = t; }
        return a;
    }

    static Rational normalize(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        if (n == 0) return Rational(0);
        unsigned __int128 an = n < 0 ? (unsigned __int128)(-n) : (unsigned __int128)n;
        unsigned __int128 g = gcd128(an, (unsigned __int128)d);
        n /= (__int128)g;
        d /= (__int128)g;
        constexpr __int128 lo = -(__int128)0x7fffffffffffffffLL - 1;
        constexpr __int128 hi = (__int128)0x7fffffffffffffffLL;
        if (n < lo || n > hi || d > hi) throw std::overflow_error("rational exceeds 64-bit storage");
        Rational r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace magiclab
