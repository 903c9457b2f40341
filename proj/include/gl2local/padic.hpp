#pragma once

#include "gl2local/rational.hpp"

#include <cstdint>
#include <vector>

namespace gl2local {

struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invalid_data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Working context for truncated arithmetic in Q_p: odd prime p, all unit
// arithmetic carried modulo p^N.
struct LocalFieldCtx {
    long long p;
    int N;

    LocalFieldCtx(long long p_, int N_) : p(p_), N(N_) {
        if (p < 3 || !is_prime(p)) throw invalid_data_error("ctx: p must be an odd prime");
        if (N < 1) throw invalid_data_error("ctx: N >= 1 required");
        if (pow_check(p, N) == 0) throw invalid_data_error("ctx: p^N overflows");
    }
    long long q() const { return p; }

    uint64_t pw(int k) const {
        uint64_t r = 1;
        for (int i = 0; i < k; ++i) r *= (uint64_t)p;
        return r;
    }

    static bool is_prime(long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
    static uint64_t pow_check(long long p, int n) {
        uint64_t r = 1;
        for (int i = 0; i < n; ++i) {
            if (r > UINT64_MAX / (uint64_t)(2 * p)) return 0;
            r *= (uint64_t)p;
        }
        return r;
    }
};

// Truncated element of F = Q_p.  Nonzero: x = u * p^v with u a unit known
// modulo p^prec.  u == 0 encodes a zero ball: all that is known is
// x in p^v * o.
struct PAdic {
    const LocalFieldCtx* F = nullptr;
    int v = 0;
    uint64_t u = 0;
    int prec = 0;

    PAdic() = default;
    PAdic(const LocalFieldCtx& ctx, long long n);                // exact integer
    static PAdic from_rational(const LocalFieldCtx& ctx, long long num, long long den);
    static PAdic zero_ball(const LocalFieldCtx& ctx, int bound);
    static PAdic unit_elt(const LocalFieldCtx& ctx, uint64_t unit, int val, int prec);

    bool is_zero() const { return u == 0; }
    // valuation; error when the element is a zero ball (valuation only bounded)
    int val() const;
    // decide v(x) >= k, or raise a precision error when the ball cannot
    bool val_ge(int k) const;
    bool is_unit() const { return !is_zero() && v == 0; }
    uint64_t unit_mod(int k) const;  // the unit part modulo p^k
    long long residue(int k) const;  // canonical lift of x modulo p^k (requires v >= 0)

    PAdic operator+(const PAdic& o) const;
    PAdic operator-(const PAdic& o) const;
    PAdic operator*(const PAdic& o) const;
    PAdic operator/(const PAdic& o) const;
    PAdic operator-() const;
    PAdic inv() const;
    PAdic shift(int k) const;  // multiply by p^k

    bool eq(const PAdic& o) const { return (*this - o).is_zero(); }

    // square root of a square (Hensel lift), error if not a square
    PAdic sqrt() const;
    bool is_square_unit() const;

    std::string str() const;
};

PAdic operator*(long long a, const PAdic& x);

// canonical lifts 0 .. p^n-1 in increasing order
std::vector<uint64_t> enumerate_residues(const LocalFieldCtx& ctx, int n,
                                         uint64_t cap = 100000000ull);
std::vector<uint64_t> enumerate_units(const LocalFieldCtx& ctx, int n,
                                      uint64_t cap = 100000000ull);

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod(uint64_t a, uint64_t m);

} // namespace gl2local
