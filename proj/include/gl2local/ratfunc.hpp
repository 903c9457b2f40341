#pragma once

#include "gl2local/rational.hpp"

#include <vector>

namespace gl2local {

// Exact monomial value zeta * q^{h/2} with zeta a root of unity; used for
// the geometric ratios of L-factors and for evaluation points X0 = q^{-s0},
// so that pole tests are decided exactly.
struct Monomial {
    Angle ang;        // the root-of-unity part
    int halfQPow = 0; // power of q^{1/2}

    Monomial() = default;
    Monomial(Angle a, int h) : ang(a), halfQPow(h) {}
    Monomial mul(const Monomial& o) const { return {ang + o.ang, halfQPow + o.halfQPow}; }
    Monomial inv() const { return {-ang, -halfQPow}; }
    bool is_one() const { return ang.is_zero() && halfQPow == 0; }
    bool operator==(const Monomial& o) const { return ang == o.ang && halfQPow == o.halfQPow; }
    cx value(long long q) const { return ang.value() * std::pow((double)q, 0.5 * halfQPow); }
};

// Laurent polynomial in X with complex coefficients.
struct Laurent {
    int low = 0;                 // exponent of the first stored coefficient
    std::vector<cx> coef;        // coef[i] multiplies X^{low+i}

    Laurent() = default;
    static Laurent zero() { return Laurent(); }
    static Laurent constant(cx c);
    static Laurent monomial(cx c, int e);
    bool is_zero(double tol = 0.0) const;
    cx at(int e) const;
    void set(int e, cx c);
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent scaled(cx c) const;
    Laurent shifted(int e) const;       // multiply by X^e
    cx eval(cx x) const;
    double max_abs() const;
    void trim(double tol = 1e-13);
    std::string str() const;
};

// Rational function N(X) / prod_i (1 - g_i X), with the geometric factors
// kept exact so poles can be located without numerics.
struct RatFunc {
    long long q = 0;
    Laurent num;
    std::vector<Monomial> den;  // factors 1 - g X

    static RatFunc zero(long long q);
    static RatFunc constant(long long q, cx c);
    static RatFunc from_laurent(long long q, Laurent l);
    // 1 / prod (1 - g_i X)
    static RatFunc inverse_factors(long long q, std::vector<Monomial> gs);

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc scaled(cx c) const;
    RatFunc mul_laurent(const Laurent& l) const;

    // cancel numerator zeros against den factors (numerically guarded)
    void reduce(double tol = 1e-9);

    bool has_pole_at(const Monomial& X0, double tol = 1e-9) const;
    cx eval(const Monomial& X0) const;  // error if a surviving factor vanishes
    bool equal(const RatFunc& o, double tol = 1e-9) const;
    // residual polynomial of the cross-multiplied identity this == o
    Laurent residual(const RatFunc& o) const;
    // is num / den a Laurent polynomial? (synthetic division, remainder < tol)
    bool is_laurent_polynomial(double tol = 1e-9) const;
    std::string str() const;
};

// divide l by (1 - g X); remainder returned through *rem
Laurent divide_geometric(const Laurent& l, const Monomial& g, long long q, cx* rem);

} // namespace gl2local
