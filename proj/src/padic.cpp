#include "gl2local/padic.hpp"

#include <algorithm>

namespace gl2local {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return (uint64_t)((__uint128_t)a * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
    long long t = 0, nt = 1;
    long long r = (long long)m, nr = (long long)(a % m);
    while (nr) {
        long long qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    if (r != 1) throw arith_error("invmod: not invertible");
    return (uint64_t)(t < 0 ? t + (long long)m : t);
}

static void strip_p(const LocalFieldCtx& F, uint64_t& u, int& v, int& prec) {
    // u known mod p^prec; factor out p-powers, shrinking relative precision
    while (prec > 0 && u % (uint64_t)F.p == 0) {
        u /= (uint64_t)F.p;
        ++v;
        --prec;
    }
}

PAdic::PAdic(const LocalFieldCtx& ctx, long long n) {
    F = &ctx;
    if (n == 0) {
        // exact zero: bound at a generous absolute precision
        v = ctx.N + 64;
        u = 0;
        prec = 0;
        return;
    }
    bool neg = n < 0;
    uint64_t a = neg ? (uint64_t)(-n) : (uint64_t)n;
    v = 0;
    while (a % (uint64_t)ctx.p == 0) {
        a /= (uint64_t)ctx.p;
        ++v;
    }
    prec = ctx.N;
    uint64_t m = ctx.pw(prec);
    u = a % m;
    if (neg) u = (m - u) % m;
}

PAdic PAdic::from_rational(const LocalFieldCtx& ctx, long long num, long long den) {
    PAdic a(ctx, num), b(ctx, den);
    return a / b;
}

PAdic PAdic::zero_ball(const LocalFieldCtx& ctx, int bound) {
    PAdic x;
    x.F = &ctx;
    x.v = bound;
    x.u = 0;
    x.prec = 0;
    return x;
}

PAdic PAdic::unit_elt(const LocalFieldCtx& ctx, uint64_t unit, int val, int prec) {
    if (prec < 1 || prec > ctx.N) throw precision_error("unit_elt: bad precision");
    uint64_t m = ctx.pw(prec);
    unit %= m;
    if (unit % (uint64_t)ctx.p == 0) throw invalid_data_error("unit_elt: not a unit");
    PAdic x;
    x.F = &ctx;
    x.v = val;
    x.u = unit;
    x.prec = prec;
    return x;
}

int PAdic::val() const {
    if (is_zero()) throw precision_error("val: zero ball has no exact valuation");
    return v;
}

bool PAdic::val_ge(int k) const {
    if (!is_zero()) return v >= k;
    if (v >= k) return true;
    throw precision_error("val_ge: undecidable at this precision");
}

uint64_t PAdic::unit_mod(int k) const {
    if (is_zero()) throw precision_error("unit_mod: zero ball");
    if (k > prec) throw precision_error("unit_mod: beyond known precision");
    return u % F->pw(k);
}

long long PAdic::residue(int k) const {
    if (k < 0) throw invalid_data_error("residue: k >= 0");
    if (is_zero()) {
        if (v >= k) return 0;
        throw precision_error("residue: zero ball too coarse");
    }
    if (v < 0) throw precision_error("residue: negative valuation");
    if (v >= k) return 0;
    if (prec < k - v) throw precision_error("residue: beyond known precision");
    uint64_t m = F->pw(k);
    return (long long)(u % F->pw(k - v) * F->pw(v) % m);
}

PAdic PAdic::operator+(const PAdic& o) const {
    if (F != o.F) throw invalid_data_error("mixed contexts");
    const PAdic *x = this, *y = &o;
    // absolute precision bounds
    int bx = x->is_zero() ? x->v : x->v + x->prec;
    int by = y->is_zero() ? y->v : y->v + y->prec;
    int babs = std::min(bx, by);
    if (x->is_zero() && y->is_zero()) return zero_ball(*F, babs);
    if (x->is_zero()) std::swap(x, y);
    if (y->is_zero()) {
        // x + (0 mod p^{y->v}): digits of x below p^babs survive
        if (x->v >= babs) return zero_ball(*F, babs);
        int np = std::min(x->prec, babs - x->v);
        return unit_elt(*F, x->u % F->pw(np), x->v, np);
    }
    int a = std::min(x->v, y->v);
    if (babs <= a) return zero_ball(*F, babs);
    int digits = babs - a;  // digits known past p^a
    if (digits > F->N) digits = F->N;
    uint64_t m = F->pw(digits);
    uint64_t ux = (x->v - a >= digits) ? 0 : x->u % F->pw(digits - (x->v - a)) * F->pw(x->v - a) % m;
    uint64_t uy = (y->v - a >= digits) ? 0 : y->u % F->pw(digits - (y->v - a)) * F->pw(y->v - a) % m;
    uint64_t s = (ux + uy) % m;
    if (s == 0) return zero_ball(*F, a + digits);
    int vv = a, pp = digits;
    strip_p(*F, s, vv, pp);
    return unit_elt(*F, s, vv, pp);
}

PAdic PAdic::operator-() const {
    if (is_zero()) return *this;
    uint64_t m = F->pw(prec);
    return unit_elt(*F, (m - u) % m, v, prec);
}

PAdic PAdic::operator-(const PAdic& o) const { return *this + (-o); }

PAdic PAdic::operator*(const PAdic& o) const {
    if (F != o.F) throw invalid_data_error("mixed contexts");
    if (is_zero() || o.is_zero()) {
        // bound: v(xy) >= v-bound(x) + v-bound(y) taking known valuations
        int bx = is_zero() ? v : v;
        int by = o.is_zero() ? o.v : o.v;
        return zero_ball(*F, bx + by);
    }
    int np = std::min(prec, o.prec);
    uint64_t m = F->pw(np);
    return unit_elt(*F, mulmod(u % m, o.u % m, m), v + o.v, np);
}

PAdic operator*(long long a, const PAdic& x) {
    PAdic y(*x.F, a);
    return y * x;
}

PAdic PAdic::inv() const {
    if (is_zero()) throw precision_error("inv: zero ball");
    uint64_t m = F->pw(prec);
    return unit_elt(*F, invmod(u, m), -v, prec);
}

PAdic PAdic::operator/(const PAdic& o) const { return *this * o.inv(); }

PAdic PAdic::shift(int k) const {
    if (is_zero()) return zero_ball(*F, v + k);
    return unit_elt(*F, u, v + k, prec);
}

bool PAdic::is_square_unit() const {
    if (is_zero() || v != 0) return false;
    // p odd: a unit is square iff its residue mod p is a QR
    return powmod(u % (uint64_t)F->p, (uint64_t)(F->p - 1) / 2, (uint64_t)F->p) == 1;
}

PAdic PAdic::sqrt() const {
    if (is_zero()) throw precision_error("sqrt: zero ball");
    if (v % 2 != 0) throw invalid_data_error("sqrt: odd valuation");
    uint64_t p = (uint64_t)F->p;
    uint64_t r0 = 0;
    bool found = false;
    for (uint64_t r = 1; r < p; ++r)
        if (r * r % p == u % p) {
            r0 = r;
            found = true;
            break;
        }
    if (!found) throw invalid_data_error("sqrt: not a square");
    // Newton lift r -> (r + u/r)/2, doubling digits
    int k = 1;
    uint64_t r = r0;
    uint64_t inv2 = invmod(2, F->pw(prec));
    while (k < prec) {
        k = std::min(2 * k, prec);
        uint64_t m = F->pw(k);
        r = mulmod((r + mulmod(u % m, invmod(r % m, m), m)) % m, inv2 % m, m);
    }
    return unit_elt(*F, r, v / 2, prec);
}

std::string PAdic::str() const {
    if (is_zero()) return "O(p^" + std::to_string(v) + ")";
    return std::to_string(u) + "*p^" + std::to_string(v) + "+O(p^" + std::to_string(v + prec) + ")";
}

std::vector<uint64_t> enumerate_residues(const LocalFieldCtx& ctx, int n, uint64_t cap) {
    if (n < 0 || n > ctx.N) throw precision_error("enumerate_residues: 0 <= n <= N");
    uint64_t m = ctx.pw(n);
    if (m > cap) throw capacity_error("enumerate_residues: cap exceeded");
    std::vector<uint64_t> out(m);
    for (uint64_t i = 0; i < m; ++i) out[i] = i;
    return out;
}

std::vector<uint64_t> enumerate_units(const LocalFieldCtx& ctx, int n, uint64_t cap) {
    if (n < 1 || n > ctx.N) throw precision_error("enumerate_units: 1 <= n <= N");
    uint64_t m = ctx.pw(n);
    if (m > cap) throw capacity_error("enumerate_units: cap exceeded");
    std::vector<uint64_t> out;
    out.reserve(m - m / (uint64_t)ctx.p);
    for (uint64_t i = 1; i < m; ++i)
        if (i % (uint64_t)ctx.p != 0) out.push_back(i);
    return out;
}

} // namespace gl2local
