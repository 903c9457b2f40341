#pragma once

#include "gl2local/padic.hpp"

namespace gl2local {

enum class ExtCase { Split, Inert, Ramified };

inline const char* ext_case_name(ExtCase c) {
    switch (c) {
        case ExtCase::Split: return "split";
        case ExtCase::Inert: return "inert";
        default: return "ramified";
    }
}

struct QuadExt;

// Element of L = F[beta] written x + y*beta, with beta a root of
// c t^2 - b t + a = 0.  The same coordinates work for L = F + F.
struct LElement {
    const QuadExt* E = nullptr;
    PAdic x, y;

    LElement() = default;
    LElement(const QuadExt& ext, PAdic x_, PAdic y_) : E(&ext), x(x_), y(y_) {}

    LElement operator+(const LElement& o) const;
    LElement operator-(const LElement& o) const;
    LElement operator*(const LElement& o) const;
    LElement conj() const;
    PAdic norm() const;   // x^2 + (b/c) x y + (a/c) y^2
    PAdic trace() const;  // 2x + (b/c) y
    LElement inv() const;
    bool eq(const LElement& o) const { return x.eq(o.x) && y.eq(o.y); }

    // normalized valuation of L (v_L(pi_L) = 1, v_L(pi) = e(L/F));
    // split case: min of the two split coordinates
    int vL() const;
    bool is_unit() const { return vL() == 0; }

    // coordinates with respect to xi0 = c*beta - b:  x + y*beta = x' + y'*xi0
    PAdic xi0_x() const;
    PAdic xi0_y() const;
};

// Extension data (a, b, c) of the degree-two algebra L/F with
// d = b^2 - 4ac, plus the derived elements beta, xi0, u0 and pi_L.
struct QuadExt {
    const LocalFieldCtx* F = nullptr;
    PAdic a, b, c, d;
    ExtCase kind = ExtCase::Inert;
    int eLF = 1;       // ramification degree
    int va = 0;        // v(a)
    long long u0 = 0;  // ramified only: c u0^2 + b u0 + a in p
    PAdic sqrt_d;      // split only

    LElement beta() const { return LElement(*this, PAdic(*F, 0), PAdic(*F, 1)); }
    LElement xi0() const;  // (-b + sqrt d)/2 = c*beta - b
    LElement one() const { return LElement(*this, PAdic(*F, 1), PAdic(*F, 0)); }
    LElement from_int(long long n) const { return LElement(*this, PAdic(*F, n), PAdic(*F, 0)); }
    LElement scalar(const PAdic& s) const { return LElement(*this, s, PAdic(*F, 0)); }
    // x + y*xi0
    LElement from_xi0(const PAdic& x, const PAdic& y) const;
    LElement pi_L() const;  // uniformizer: pi (inert), u0 + beta (ramified), n/a split
    LElement pi_L_pow(int k) const;

    // split coordinates of x + y*beta (requires split case)
    std::pair<PAdic, PAdic> split_coords(const LElement& z) const;
};

// Classifies (a,b,c) per the standing assumptions: a,b in o, c in o^x,
// d a unit square (split), a nonsquare unit (inert) or of valuation 1
// (ramified, "d generates the discriminant").
QuadExt build_quadratic_data(const LocalFieldCtx& F, long long a, long long b, long long c);
QuadExt build_quadratic_data(const LocalFieldCtx& F, PAdic a, PAdic b, PAdic c);

int legendre_symbol(const QuadExt& E);
// number of roots of c u^2 + b u + a over o/p
int root_count_mod_p(const QuadExt& E);

// convenience: standard extensions for test sweeps
QuadExt make_ext(const LocalFieldCtx& F, ExtCase kind, int va = 0);

} // namespace gl2local
