#pragma once

#include "gl2local/quadext.hpp"

namespace gl2local {

// 2x2 matrix over F, row-major entries a b / c d.
struct Mat2 {
    PAdic a, b, c, d;

    Mat2() = default;
    Mat2(PAdic a_, PAdic b_, PAdic c_, PAdic d_) : a(a_), b(b_), c(c_), d(d_) {}

    static Mat2 ident(const LocalFieldCtx& F) {
        return Mat2(PAdic(F, 1), PAdic(F, 0), PAdic(F, 0), PAdic(F, 1));
    }
    static Mat2 weyl(const LocalFieldCtx& F) {  // w = [0 1; -1 0]
        return Mat2(PAdic(F, 0), PAdic(F, 1), PAdic(F, -1), PAdic(F, 0));
    }
    static Mat2 diag(PAdic x, PAdic y) {
        return Mat2(x, PAdic(*x.F, 0), PAdic(*x.F, 0), y);
    }
    static Mat2 diag_pi(const LocalFieldCtx& F, int m) {  // diag(pi^m, 1)
        return diag(PAdic(F, 1).shift(m), PAdic(F, 1));
    }
    static Mat2 upper(PAdic u) {  // n(u)
        return Mat2(PAdic(*u.F, 1), u, PAdic(*u.F, 0), PAdic(*u.F, 1));
    }
    static Mat2 lower(PAdic u) {  // nbar(u)
        return Mat2(PAdic(*u.F, 1), PAdic(*u.F, 0), u, PAdic(*u.F, 1));
    }
    static Mat2 atkin_lehner(const LocalFieldCtx& F) {  // [0 1; pi 0]
        return Mat2(PAdic(F, 0), PAdic(F, 1), PAdic(F, F.p), PAdic(F, 0));
    }

    Mat2 operator*(const Mat2& o) const {
        return Mat2(a * o.a + b * o.c, a * o.b + b * o.d,
                    c * o.a + d * o.c, c * o.b + d * o.d);
    }
    Mat2 operator*(const PAdic& s) const { return Mat2(a * s, b * s, c * s, d * s); }
    PAdic det() const { return a * d - b * c; }
    Mat2 inv() const {
        PAdic dt = det();
        return Mat2(d / dt, -(b / dt), -(c / dt), a / dt);
    }
    bool eq(const Mat2& o) const {
        return a.eq(o.a) && b.eq(o.b) && c.eq(o.c) && d.eq(o.d);
    }
};

enum class Subgroup { K1, K2, K1Conj, Iwahori, GL2o };

// Membership of the congruence subgroups; K1(p^n), K2(p^n), the conjugate
// K1^(s)(p^n), the Iwahori subgroup and GL2(o).  For K1Conj the level s is
// passed separately.
bool subgroup_member(const Mat2& g, Subgroup which, int n = 0, int s = 0);

// Iwasawa decomposition g = b * k with b upper triangular, k in GL2(o).
struct BK {
    Mat2 b, k;
};
BK iwasawa(const Mat2& g);

// The torus of the quadratic datum, in both parameterizations.
// t_sqrt(x, y) = [x + by/2, cy; -ay, x - by/2]   (matrix of x + y*sqrt(d)/2)
// t_xi0(x, y)  = [x, cy; -ay, x - by]            (matrix of x + y*xi0)
Mat2 torus_mat_sqrt(const QuadExt& E, const PAdic& x, const PAdic& y);
Mat2 torus_mat_xi0(const QuadExt& E, const PAdic& x, const PAdic& y);
Mat2 torus_mat(const QuadExt& E, const LElement& z);  // via xi0 coordinates
bool in_torus(const QuadExt& E, const Mat2& g);       // tests ^t g S g = det(g) S

// Lemma-style Borel decomposition of t(x,y) * diag(pi^s, 1) = b * k.
struct BorelDecomp {
    Mat2 b, k;
    int caseId;  // 1..4
};
BorelDecomp borel_decompose(const QuadExt& E, const PAdic& x, const PAdic& y, int s);

// Verifies the factorization behind
//   T(F) diag(pi^-m,1) K1(p^n) = T(F) diag(pi^{m-v(a)},1) w K1(p^n)
// by constructing each factor and multiplying.
bool toric_coset_identity(const QuadExt& E, int m, int n);

} // namespace gl2local
