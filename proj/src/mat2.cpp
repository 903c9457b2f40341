#include "gl2local/mat2.hpp"

namespace gl2local {

static bool vge(const PAdic& x, int k) { return x.val_ge(k); }
static bool is_unit_entry(const PAdic& x) { return !x.is_zero() && x.val() == 0; }

bool subgroup_member(const Mat2& g, Subgroup which, int n, int s) {
    switch (which) {
        case Subgroup::GL2o:
            return vge(g.a, 0) && vge(g.b, 0) && vge(g.c, 0) && vge(g.d, 0) &&
                   is_unit_entry(g.det());
        case Subgroup::Iwahori:
            return subgroup_member(g, Subgroup::GL2o) && vge(g.c, 1);
        case Subgroup::K1:
            if (n == 0) return subgroup_member(g, Subgroup::GL2o);
            return vge(g.b, 0) && is_unit_entry(g.a) && vge(g.c, n) &&
                   (g.d - PAdic(*g.a.F, 1)).val_ge(n);
        case Subgroup::K2:
            if (n == 0) return subgroup_member(g, Subgroup::GL2o);
            return vge(g.b, 0) && (g.a - PAdic(*g.a.F, 1)).val_ge(n) && vge(g.c, n) &&
                   (g.d - PAdic(*g.a.F, 1)).val_ge(n);
        case Subgroup::K1Conj: {
            const LocalFieldCtx& F = *g.a.F;
            Mat2 h = Mat2::diag_pi(F, -s) * g * Mat2::diag_pi(F, s);
            return subgroup_member(h, Subgroup::K1, n);
        }
    }
    throw invalid_data_error("subgroup_member");
}

BK iwasawa(const Mat2& g) {
    const LocalFieldCtx& F = *g.a.F;
    PAdic dt = g.det();
    if (dt.is_zero()) throw precision_error("iwasawa: determinant indistinguishable from 0");
    // choose the bottom-row entry of smaller valuation as pivot
    bool czero = g.c.is_zero();
    bool dzero = g.d.is_zero();
    if (czero && dzero) throw precision_error("iwasawa: bottom row vanishes at precision");
    bool use_d;
    if (czero) use_d = true;
    else if (dzero) use_d = false;
    else use_d = g.d.val() <= g.c.val();
    if (use_d) {
        // g = [A - BC/D, B; 0, D] * nbar(C/D), and nbar(C/D) in GL2(o) iff v(C/D) >= 0
        PAdic r = czero ? PAdic::zero_ball(F, g.c.v - g.d.val()) : g.c / g.d;
        if (!r.val_ge(0)) throw precision_error("iwasawa: pivot choice failed");
        Mat2 b(g.a - g.b * r, g.b, PAdic(F, 0), g.d);
        Mat2 k = Mat2::lower(r);
        return {b, k};
    }
    // pivot c: g = n(A/C) diag(-det/C, C) w n(D/C) with w n(D/C) in GL2(o)
    PAdic e = g.a / g.c;
    PAdic f = g.d / g.c;
    if (!f.val_ge(0)) throw precision_error("iwasawa: v(d/c) < 0 unexpected");
    Mat2 b = Mat2::upper(e) * Mat2::diag(-(dt / g.c), -g.c);
    Mat2 k = Mat2::weyl(F) * Mat2::upper(f);
    return {b, k};
}

Mat2 torus_mat_sqrt(const QuadExt& E, const PAdic& x, const PAdic& y) {
    const LocalFieldCtx& F = *E.F;
    PAdic half = PAdic::from_rational(F, 1, 2);
    return Mat2(x + E.b * y * half, E.c * y, -(E.a * y), x - E.b * y * half);
}

Mat2 torus_mat_xi0(const QuadExt& E, const PAdic& x, const PAdic& y) {
    return Mat2(x, E.c * y, -(E.a * y), x - E.b * y);
}

Mat2 torus_mat(const QuadExt& E, const LElement& z) {
    return torus_mat_xi0(E, z.xi0_x(), z.xi0_y());
}

bool in_torus(const QuadExt& E, const Mat2& g) {
    const LocalFieldCtx& F = *E.F;
    PAdic half = PAdic::from_rational(F, 1, 2);
    Mat2 S(E.a, E.b * half, E.b * half, E.c);
    Mat2 gt(g.a, g.c, g.b, g.d);
    Mat2 lhs = gt * S * g;
    Mat2 rhs = S * g.det();
    return lhs.eq(rhs);
}

BorelDecomp borel_decompose(const QuadExt& E, const PAdic& x, const PAdic& y, int s) {
    const LocalFieldCtx& F = *E.F;
    PAdic half = PAdic::from_rational(F, 1, 2);
    PAdic u = x - E.b * y * half;  // x - by/2
    Mat2 t = torus_mat_sqrt(E, x, y);
    PAdic dt = t.det();
    PAdic pis = PAdic(F, 1).shift(s);
    bool u_unit_scaled;  // u in pi^-l o^x for some l >= 0
    int l = 0;
    if (!u.is_zero() && u.val() <= 0) {
        u_unit_scaled = true;
        l = -u.val();
    } else {
        u_unit_scaled = false;  // u in p
        if (!u.val_ge(1)) throw precision_error("borel_decompose: case split undecidable");
    }
    PAdic ay = E.a * y;
    BorelDecomp out;
    if (u_unit_scaled) {
        PAdic w = ay.shift(s + l);  // a pi^{s+l} y
        bool in_o = w.is_zero() ? w.val_ge(0) : w.val() >= 0;
        if (in_o) {
            out.caseId = 1;
            out.b = Mat2(dt.shift(s) / u, (E.c * y / u).shift(-l), PAdic(F, 0),
                         PAdic(F, 1).shift(-l));
            out.k = Mat2(PAdic(F, 1), PAdic(F, 0), -w, u.shift(l));
        } else {
            out.caseId = 2;
            out.b = Mat2(dt / ay, -(x + E.b * y * half).shift(s), PAdic(F, 0), ay.shift(s));
            out.k = Mat2(PAdic(F, 0), PAdic(F, 1), PAdic(F, -1), u / ay.shift(s));
        }
    } else {
        PAdic r = u / ay.shift(s);
        bool in_o = r.is_zero() ? r.val_ge(0) : r.val() >= 0;
        if (in_o) {
            out.caseId = 3;
            out.b = Mat2(dt / ay, -(x + E.b * y * half).shift(s), PAdic(F, 0), ay.shift(s));
            out.k = Mat2(PAdic(F, 0), PAdic(F, 1), PAdic(F, -1), r);
        } else {
            out.caseId = 4;
            out.b = Mat2(dt.shift(s) / u, E.c * y, PAdic(F, 0), u);
            out.k = Mat2(PAdic(F, 1), PAdic(F, 0), -(ay.shift(s)) / u, PAdic(F, 1));
        }
    }
    if (!(out.b * out.k).eq(t * Mat2::diag_pi(F, s)))
        throw arith_error("borel_decompose: reconstruction failed");
    return out;
}

bool toric_coset_identity(const QuadExt& E, int m, int n) {
    if (m < 0 || n < 0) throw invalid_data_error("toric_coset_identity: m, n >= 0");
    const LocalFieldCtx& F = *E.F;
    int va = E.va;
    PAdic y = PAdic(F, 1).shift(-m);
    PAdic half = PAdic::from_rational(F, 1, 2);
    PAdic x = E.b * y * half;
    Mat2 t = torus_mat_sqrt(E, x, y);
    PAdic aunit = E.a.shift(-va);  // a pi^{-v(a)}
    Mat2 k(aunit / E.c, (E.b / E.c).shift(m - va), PAdic(F, 0), PAdic(F, 1));
    if (!subgroup_member(k, Subgroup::K1, n)) return false;
    PAdic scale = -(aunit.inv());
    Mat2 rhs = (t * scale) * Mat2::diag_pi(F, m - va) * Mat2::weyl(F) * k;
    return rhs.eq(Mat2::diag_pi(F, -m));
}

} // namespace gl2local
