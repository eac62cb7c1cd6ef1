#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tileflip {

// Exact rational on int64 with __int128 intermediates. Transition matrices
// of the small chains are verified with these, never with floating point.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    static Rat from128(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rat r;
        r.num = static_cast<long long>(n);
        r.den = static_cast<long long>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    friend Rat operator+(Rat a, Rat b) {
        return from128((__int128)a.num * b.den + (__int128)b.num * a.den,
                       (__int128)a.den * b.den);
    }
    friend Rat operator-(Rat a, Rat b) {
        return from128((__int128)a.num * b.den - (__int128)b.num * a.den,
                       (__int128)a.den * b.den);
    }
    friend Rat operator*(Rat a, Rat b) {
        return from128((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(Rat a, Rat b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return from128((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rat& operator+=(Rat o) { return *this = *this + o; }
    Rat& operator-=(Rat o) { return *this = *this - o; }
    Rat& operator*=(Rat o) { return *this = *this * o; }

    friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rat a, Rat b) { return !(a == b); }
    friend bool operator<(Rat a, Rat b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(Rat a, Rat b) { return a == b || a < b; }
    friend bool operator>(Rat a, Rat b) { return b < a; }
    friend bool operator>=(Rat a, Rat b) { return b <= a; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    static Rat pow(Rat base, int e) {
        Rat r(1);
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    }
};

// Parses "1/3", "2", or a decimal like "0.25" into an exact rational.
Rat parse_rational(const std::string& text);

}  // namespace tileflip
