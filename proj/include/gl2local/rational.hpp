#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gl2local {

using cx = std::complex<double>;

struct arith_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational on int64 with 128-bit intermediates.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw arith_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rat from128(__int128 n, __int128 d) {
        if (d == 0) throw arith_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw arith_error("Rat: overflow");
        Rat r;
        r.num = (long long)n;
        r.den = (long long)d;
        return r;
    }

    Rat operator+(const Rat& o) const {
        return from128((__int128)num * o.den + (__int128)o.num * den, (__int128)den * o.den);
    }
    Rat operator-(const Rat& o) const {
        return from128((__int128)num * o.den - (__int128)o.num * den, (__int128)den * o.den);
    }
    Rat operator*(const Rat& o) const {
        return from128((__int128)num * o.num, (__int128)den * o.den);
    }
    Rat operator/(const Rat& o) const {
        if (o.num == 0) throw arith_error("Rat: division by zero");
        return from128((__int128)num * o.den, (__int128)den * o.num);
    }
    Rat operator-() const { return Rat(-num, den); }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const {
        return (__int128)num * o.den < (__int128)o.num * den;
    }
    double to_double() const { return double(num) / double(den); }
    bool is_integer() const { return den == 1; }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// Rational angle in [0,1): the character value e^{2 pi i a}. Equality is exact.
struct Angle {
    Rat a;

    Angle() = default;
    explicit Angle(Rat r) : a(r) { reduce(); }
    Angle(long long n, long long d) : a(n, d) { reduce(); }

    void reduce() {
        long long n = a.num % a.den;
        if (n < 0) n += a.den;
        a = Rat(n, a.den);
    }
    Angle operator+(const Angle& o) const { return Angle(a + o.a); }
    Angle operator-(const Angle& o) const { return Angle(a - o.a); }
    Angle operator-() const { return Angle(-a); }
    Angle times(long long k) const { return Angle(a * Rat(k)); }
    bool is_zero() const { return a.num == 0; }
    bool operator==(const Angle& o) const { return a == o.a; }
    bool operator!=(const Angle& o) const { return !(*this == o); }
    cx value() const {
        if (a.num == 0) return {1.0, 0.0};
        double t = 2.0 * 3.14159265358979323846 * a.to_double();
        return {std::cos(t), std::sin(t)};
    }
    // order of the root of unity
    long long order() const { return a.den; }
};

inline Angle half(const Angle& x) { return Angle(Rat(x.a.num, 2 * x.a.den)); }

} // namespace gl2local
