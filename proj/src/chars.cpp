#include "gl2local/chars.hpp"

namespace gl2local {

Angle AdditiveChar::angle(const PAdic& x) const {
    if (x.is_zero()) {
        if (x.v >= 0) return Angle();
        throw precision_error("psi: zero ball below o");
    }
    if (x.val() >= 0) return Angle();
    int k = -x.val();
    if (k > x.prec) throw precision_error("psi: argument too coarse");
    uint64_t pk = F->pw(k);
    return Angle((long long)(x.unit_mod(k) % pk), (long long)pk);
}

Angle MultChar::angle_unit(uint64_t u) const {
    if (cond == 0) return Angle();
    return genAngle.times((long long)grp->dlog_of(u % grp->mod));
}

Angle MultChar::angle(const PAdic& x) const {
    int v = x.val();
    Angle a = piAngle.times(v);
    if (cond > 0) a = a + angle_unit(x.unit_mod(cond));
    return a;
}

cx MultChar::eval(const PAdic& x) const {
    cx u = angle(x).value();
    if (halfAbsPow != 0) u *= std::pow((double)F->p, -0.5 * halfAbsPow * x.val());
    return u;
}

cx MultChar::eval_inv(const PAdic& x) const {
    cx u = (-angle(x)).value();
    if (halfAbsPow != 0) u *= std::pow((double)F->p, 0.5 * halfAbsPow * x.val());
    return u;
}

MultChar trivial_char(const LocalFieldCtx& F) {
    MultChar c;
    c.F = &F;
    c.cond = 0;
    return c;
}

MultChar unramified_char(const LocalFieldCtx& F, Angle piAngle) {
    MultChar c;
    c.F = &F;
    c.cond = 0;
    c.piAngle = piAngle;
    return c;
}

MultChar build_mult_char(const LocalFieldCtx& F, int level, Angle genAngle, Angle piAngle,
                         int halfAbsPow) {
    if (level < 0 || level > F.N) throw invalid_data_error("build_mult_char: bad level");
    MultChar c;
    c.F = &F;
    c.piAngle = piAngle;
    c.halfAbsPow = halfAbsPow;
    if (level == 0 || genAngle.is_zero()) {
        c.cond = 0;
        return c;
    }
    auto g = UnitGroupModPc::get(F, level);
    if ((long long)g->order % genAngle.order() != 0)
        throw invalid_data_error("build_mult_char: angle order does not divide group order");
    // exact conductor: smallest m >= 1 with chi trivial on the image of 1+p^m,
    // the subgroup of order p^{level-m}
    int cond = level;
    for (int m = 1; m < level; ++m) {
        uint64_t sub_order = F.pw(level - m);
        if (genAngle.times((long long)(g->order / sub_order)).is_zero()) {
            cond = m;
            break;
        }
    }
    c.cond = cond;
    c.grp = UnitGroupModPc::get(F, cond);
    if (cond == level) {
        c.genAngle = genAngle;
    } else {
        // value on the conductor-level generator, lifted to the given level
        c.genAngle = genAngle.times((long long)g->dlog_of(c.grp->gen % g->mod));
    }
    return c;
}

int conductor(const MultChar& chi) { return chi.cond; }

MultChar mc_mul(const MultChar& a, const MultChar& b) {
    const LocalFieldCtx& F = *a.F;
    int level = std::max(std::max(a.cond, b.cond), 1);
    auto g = UnitGroupModPc::get(F, level);
    Angle ga = a.angle_unit(g->gen) + b.angle_unit(g->gen);
    return build_mult_char(F, level, ga, a.piAngle + b.piAngle, a.halfAbsPow + b.halfAbsPow);
}

MultChar mc_inv(const MultChar& a) {
    const LocalFieldCtx& F = *a.F;
    int level = std::max(a.cond, 1);
    auto g = UnitGroupModPc::get(F, level);
    return build_mult_char(F, level, -a.angle_unit(g->gen), -a.piAngle, -a.halfAbsPow);
}

MultChar mc_abs_twist(const MultChar& a, int halfPow) {
    MultChar c = a;
    c.halfAbsPow += halfPow;
    return c;
}

bool mc_equal(const MultChar& a, const MultChar& b) {
    return a.cond == b.cond && a.piAngle == b.piAngle && a.halfAbsPow == b.halfAbsPow &&
           (a.cond == 0 || a.genAngle == b.genAngle);
}

std::vector<MultChar> enumerate_mult_chars(const LocalFieldCtx& F, int condExact, Angle piAngle) {
    std::vector<MultChar> out;
    if (condExact == 0) {
        out.push_back(unramified_char(F, piAngle));
        return out;
    }
    auto g = UnitGroupModPc::get(F, condExact);
    for (uint64_t k = 1; k < g->order; ++k) {
        MultChar c = build_mult_char(F, condExact, Angle((long long)k, (long long)g->order), piAngle);
        if (c.cond == condExact) out.push_back(c);
    }
    return out;
}

cx gauss_integral(const MultChar& mu, int m) {
    const LocalFieldCtx& F = *mu.F;
    int k = std::max(std::max(mu.cond, 1), -m);
    auto units = enumerate_units(F, std::min(k, F.N), 50000000ull);
    if (k > F.N) throw precision_error("gauss_integral: depth beyond precision");
    uint64_t pneg = (m < 0) ? F.pw(-m) : 1;
    cx s = 0;
    for (uint64_t a : units) {
        Angle ang;
        if (m < 0) ang = Angle((long long)(a % pneg), (long long)pneg);
        ang = ang - mu.angle_unit(a);
        s += ang.value();
    }
    return s * std::pow((double)F.p, -k);
}

cx epsilon_factor(const MultChar& mu) {
    if (mu.cond < 1) throw invalid_data_error("epsilon_factor: mu must be ramified");
    const LocalFieldCtx& F = *mu.F;
    cx g = gauss_integral(mu, -mu.cond);
    return g * std::pow((double)F.p, 0.5 * mu.cond) * mu.piAngle.times(mu.cond).value();
}

Angle OmegaChar::angle_class(uint64_t label) const {
    return Q->G.char_angle(genAngles, label);
}

Angle OmegaChar::angle(const LElement& t) const {
    int k = t.vL();
    LElement u = t;
    if (k != 0) {
        if (E->kind == ExtCase::Inert) {
            u = LElement(*E, t.x.shift(-k), t.y.shift(-k));
        } else {
            u = t * E->pi_L_pow(-k);
        }
    }
    return piLAngle.times(k) + angle_class(Q->class_of_unit(u));
}

bool OmegaChar::is_trivial_on_units() const {
    for (const auto& a : genAngles)
        if (!a.is_zero()) return false;
    return true;
}

int omega_conductor(const OmegaChar& om) {
    if (om.is_trivial_on_units()) return 0;
    for (int m = 1; m <= om.M; ++m) {
        bool trivial = true;
        for (uint64_t g : om.Q->levelGens[m])
            if (!om.angle_class(g).is_zero()) {
                trivial = false;
                break;
            }
        if (trivial) return m;
    }
    return om.M;  // levelGens[M] is empty: factoring through the quotient
}

static Angle omega_pi_angle_from_piL(const QuadExt& E, const OmegaChar& om) {
    // Omega(pi) for the ramified case: pi = pi_L^2 / w with w = pi_L^2/pi a unit
    const LocalFieldCtx& F = *E.F;
    LElement w = E.pi_L() * E.pi_L() * E.scalar(PAdic(F, 1).shift(-1));
    return om.piLAngle.times(2) - om.angle_class(om.Q->class_of_unit(w));
}

OmegaChar build_omega(const QuadExt& E, int M, std::shared_ptr<const OLQuotient> Q,
                      std::vector<Angle> genAngles, Angle piLAngle, const MultChar& omegaPi) {
    OmegaChar om;
    om.E = &E;
    om.M = M;
    om.Q = std::move(Q);
    om.genAngles = std::move(genAngles);
    om.piLAngle = piLAngle;
    om.omegaPi = omegaPi;
    if (om.genAngles.size() != om.Q->G.basis.size())
        throw invalid_data_error("build_omega: angle count mismatch");
    const LocalFieldCtx& F = *E.F;
    // validate the restriction to F^x
    if (om.Q->orbit) {
        if (omegaPi.cond != 0)
            throw invalid_data_error("build_omega: orbit quotient needs unit-trivial omega_pi");
    } else if (M >= 1) {
        auto g = UnitGroupModPc::get(F, M);
        Angle lhs = om.angle_class(om.Q->class_of_scalar(g->gen));
        Angle rhs = omegaPi.angle_unit(g->gen);
        if (!(lhs == rhs)) throw invalid_data_error("build_omega: restriction mismatch on units");
    }
    if (E.kind == ExtCase::Inert) {
        if (!(piLAngle == omegaPi.piAngle))
            throw invalid_data_error("build_omega: Omega(pi) must equal omega_pi(pi)");
    } else {
        Angle got = omega_pi_angle_from_piL(E, om);
        if (!(got == omegaPi.piAngle))
            throw invalid_data_error("build_omega: Omega(pi) mismatch");
    }
    om.cond = omega_conductor(om);
    return om;
}

std::vector<OmegaChar> enumerate_omegas(const QuadExt& E, int targetCond,
                                        const MultChar& omegaPi, uint64_t cap) {
    if (E.kind == ExtCase::Split)
        throw unsupported_error("enumerate_omegas: field extensions only");
    const LocalFieldCtx& F = *E.F;
    int M = std::max(targetCond, omegaPi.cond);
    bool orbit = omegaPi.cond == 0;
    auto Q = OLQuotient::get(E, M, orbit, cap);
    std::vector<OmegaChar> out;

    auto push_with_extensions = [&](const std::vector<Angle>& angles) {
        OmegaChar om;
        om.E = &E;
        om.M = M;
        om.Q = Q;
        om.genAngles = angles;
        om.omegaPi = omegaPi;
        if (E.kind == ExtCase::Inert) {
            om.piLAngle = omegaPi.piAngle;
            om.cond = omega_conductor(om);
            out.push_back(om);
        } else {
            LElement w = E.pi_L() * E.pi_L() * E.scalar(PAdic(F, 1).shift(-1));
            Angle target = omegaPi.piAngle + om.angle_class(Q->class_of_unit(w));
            Angle h = half(target);
            for (int s = 0; s < 2; ++s) {
                om.piLAngle = s == 0 ? h : h + Angle(1, 2);
                om.cond = omega_conductor(om);
                out.push_back(om);
            }
        }
    };

    auto ks = Q->G.char_index_begin();
    if (ks.empty()) {
        // trivial group
        if (targetCond == 0) push_with_extensions({});
        return out;
    }
    do {
        auto angles = Q->G.angles_for(ks);
        // conductor-exactness: trivial at target level (automatic), nontrivial below
        OmegaChar probe;
        probe.E = &E;
        probe.M = M;
        probe.Q = Q;
        probe.genAngles = angles;
        int c = omega_conductor(probe);
        if (c != targetCond) continue;
        if (!orbit) {
            // restriction to o^x must match omegaPi
            auto g = UnitGroupModPc::get(F, M);
            Angle lhs = probe.angle_class(Q->class_of_scalar(g->gen));
            if (!(lhs == omegaPi.angle_unit(g->gen))) continue;
        }
        push_with_extensions(angles);
    } while (Q->G.char_index_next(ks));
    return out;
}

} // namespace gl2local
