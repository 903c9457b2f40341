#include "gl2local/quadext.hpp"

namespace gl2local {

LElement LElement::operator+(const LElement& o) const {
    return LElement(*E, x + o.x, y + o.y);
}
LElement LElement::operator-(const LElement& o) const {
    return LElement(*E, x - o.x, y - o.y);
}

LElement LElement::operator*(const LElement& o) const {
    // beta^2 = (b/c) beta - a/c
    PAdic boc = E->b / E->c, aoc = E->a / E->c;
    PAdic xx = x * o.x - aoc * (y * o.y);
    PAdic yy = x * o.y + o.x * y + boc * (y * o.y);
    return LElement(*E, xx, yy);
}

LElement LElement::conj() const {
    // conj(beta) = b/c - beta
    return LElement(*E, x + (E->b / E->c) * y, -y);
}

PAdic LElement::norm() const {
    return x * x + (E->b / E->c) * (x * y) + (E->a / E->c) * (y * y);
}

PAdic LElement::trace() const { return 2 * x + (E->b / E->c) * y; }

LElement LElement::inv() const {
    PAdic n = norm();
    LElement cj = conj();
    return LElement(*E, cj.x / n, cj.y / n);
}

int LElement::vL() const {
    switch (E->kind) {
        case ExtCase::Inert: {
            // 1, beta is an integral basis with beta a unit: v_L = min coordinate valuation
            bool zx = x.is_zero(), zy = y.is_zero();
            if (zx && zy) throw precision_error("vL: zero ball");
            if (zx) {
                if (y.val() < x.v) return y.val();
                throw precision_error("vL: undecidable");
            }
            if (zy) {
                if (x.val() < y.v) return x.val();
                throw precision_error("vL: undecidable");
            }
            return std::min(x.val(), y.val());
        }
        case ExtCase::Ramified:
            // v_L = v_F(N(z)) for ramified L
            return norm().val();
        case ExtCase::Split: {
            auto [z1, z2] = E->split_coords(*this);
            return std::min(z1.val(), z2.val());
        }
    }
    throw invalid_data_error("vL: bad case");
}

PAdic LElement::xi0_x() const { return x + (E->b / E->c) * y; }
PAdic LElement::xi0_y() const { return y / E->c; }

LElement QuadExt::xi0() const { return LElement(*this, -b, c); }

LElement QuadExt::from_xi0(const PAdic& x, const PAdic& y) const {
    return LElement(*this, x - b * y, c * y);
}

LElement QuadExt::pi_L() const {
    switch (kind) {
        case ExtCase::Inert:
            return scalar(PAdic(*F, F->p));
        case ExtCase::Ramified:
            return LElement(*this, PAdic(*F, u0), PAdic(*F, 1));
        case ExtCase::Split:
            throw unsupported_error("pi_L: use split coordinates (pi,1)");
    }
    throw invalid_data_error("pi_L");
}

LElement QuadExt::pi_L_pow(int k) const {
    LElement r = one();
    LElement pl = pi_L();
    LElement pli = pl.inv();
    for (int i = 0; i < k; ++i) r = r * pl;
    for (int i = 0; i < -k; ++i) r = r * pli;
    return r;
}

std::pair<PAdic, PAdic> QuadExt::split_coords(const LElement& z) const {
    if (kind != ExtCase::Split) throw unsupported_error("split_coords: not split");
    PAdic b1 = (b + sqrt_d) / (2 * c);
    PAdic b2 = (b - sqrt_d) / (2 * c);
    return {z.x + z.y * b1, z.x + z.y * b2};
}

int root_count_mod_p(const QuadExt& E) {
    const auto& F = *E.F;
    int count = 0;
    long long aa = E.a.residue(1), bb = E.b.residue(1), cc = E.c.residue(1);
    for (long long u = 0; u < F.p; ++u)
        if ((cc * u * u + bb * u + aa) % F.p == 0) ++count;
    return count;
}

int legendre_symbol(const QuadExt& E) {
    switch (E.kind) {
        case ExtCase::Split: return 1;
        case ExtCase::Inert: return -1;
        default: return 0;
    }
}

QuadExt build_quadratic_data(const LocalFieldCtx& F, long long a, long long b, long long c) {
    return build_quadratic_data(F, PAdic(F, a), PAdic(F, b), PAdic(F, c));
}

QuadExt build_quadratic_data(const LocalFieldCtx& F, PAdic a, PAdic b, PAdic c) {
    QuadExt E;
    E.F = &F;
    if (!a.is_zero() && a.val() < 0) throw invalid_data_error("quadratic data: a must be integral");
    if (!b.is_zero() && b.val() < 0) throw invalid_data_error("quadratic data: b must be integral");
    if (c.is_zero() || c.val() != 0) throw invalid_data_error("quadratic data: c must be a unit");
    E.a = a;
    E.b = b;
    E.c = c;
    E.d = b * b - 4 * (a * c);
    if (E.d.is_zero()) throw precision_error("quadratic data: d vanishes at working precision");
    int vd = E.d.val();
    if (vd == 0) {
        if (E.d.is_square_unit()) {
            E.kind = ExtCase::Split;
            E.eLF = 1;
            E.sqrt_d = E.d.sqrt();
        } else {
            E.kind = ExtCase::Inert;
            E.eLF = 1;
        }
    } else if (vd == 1) {
        E.kind = ExtCase::Ramified;
        E.eLF = 2;
    } else {
        throw invalid_data_error("quadratic data: v(d) >= 2 violates the discriminant normalization");
    }
    E.va = a.is_zero() ? F.N : a.val();
    if (E.kind == ExtCase::Inert && E.va != 0)
        throw invalid_data_error("quadratic data: inert case forces v(a) = 0");
    if (E.kind == ExtCase::Ramified && E.va > 1)
        throw invalid_data_error("quadratic data: ramified case forces v(a) in {0,1}");
    if (E.kind == ExtCase::Ramified) {
        bool found = false;
        long long aa = a.residue(1), bb = b.residue(1), cc = c.residue(1);
        for (long long u = 0; u < F.p; ++u) {
            if ((cc * u * u + bb * u + aa) % F.p == 0) {
                E.u0 = u;
                found = true;
                break;
            }
        }
        if (!found) throw invalid_data_error("quadratic data: ramified but no residue root");
        // b + 2c u0 in p must hold as well
        PAdic t = b + 2 * (c * PAdic(F, E.u0));
        if (!t.val_ge(1)) throw invalid_data_error("quadratic data: b + 2c u0 not in p");
    }
    return E;
}

QuadExt make_ext(const LocalFieldCtx& F, ExtCase kind, int va) {
    if (kind == ExtCase::Split) return build_quadratic_data(F, -1, 0, 1);  // d = 4
    if (kind == ExtCase::Inert) {
        for (long long a = 1; a < F.p; ++a) {
            PAdic d = PAdic(F, -4 * a);
            if (!d.is_square_unit()) return build_quadratic_data(F, a, 0, 1);
        }
        throw invalid_data_error("make_ext: no inert datum found");
    }
    if (va == 1) return build_quadratic_data(F, F.p, 0, 1);  // d = -4p
    // ramified with v(a) = 0: need v(b^2 - 4a) = 1
    for (long long a = 1; a < F.p; ++a)
        for (long long b = 0; b < 2 * F.p; ++b) {
            long long d = b * b - 4 * a;
            if (d == 0) continue;
            long long vd = 0, dd = d < 0 ? -d : d;
            while (dd % F.p == 0) {
                dd /= F.p;
                ++vd;
            }
            if (vd == 1) return build_quadratic_data(F, a, b, 1);
        }
    throw invalid_data_error("make_ext: no ramified v(a)=0 datum found");
}

} // namespace gl2local
