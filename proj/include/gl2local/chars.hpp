#pragma once

#include "gl2local/unitgroups.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace gl2local {

// The standard additive character of conductor o: psi(x) = e(lift) with
// lift the canonical rational representative of x mod o.
struct AdditiveChar {
    const LocalFieldCtx* F = nullptr;
    explicit AdditiveChar(const LocalFieldCtx& ctx) : F(&ctx) {}
    Angle angle(const PAdic& x) const;
    cx eval(const PAdic& x) const { return angle(x).value(); }
};

// Character of F^x with finite-order unit part: value on a fixed generator
// g of (o/p^cond)^x plus a value on pi.  halfAbsPow adds an |x|^{h/2}
// factor for the algebraic twists chi |.|^{h/2}.
struct MultChar {
    const LocalFieldCtx* F = nullptr;
    int cond = 0;
    Angle genAngle;  // on grp->gen when cond >= 1
    Angle piAngle;
    int halfAbsPow = 0;
    std::shared_ptr<const UnitGroupModPc> grp;

    bool is_unit_trivial() const { return cond == 0; }
    Angle angle_unit(uint64_t u) const;        // unit-part value (finite order)
    Angle angle(const PAdic& x) const;         // finite-order part on x
    cx eval(const PAdic& x) const;             // includes the |x|^{h/2} factor
    cx eval_inv(const PAdic& x) const;
};

MultChar build_mult_char(const LocalFieldCtx& F, int level, Angle genAngle, Angle piAngle,
                         int halfAbsPow = 0);
MultChar trivial_char(const LocalFieldCtx& F);
MultChar unramified_char(const LocalFieldCtx& F, Angle piAngle);
int conductor(const MultChar& chi);
MultChar mc_mul(const MultChar& a, const MultChar& b);
MultChar mc_inv(const MultChar& a);
MultChar mc_abs_twist(const MultChar& a, int halfPow);  // chi |.|^{halfPow/2}
bool mc_equal(const MultChar& a, const MultChar& b);
// all characters of (o/p^c)^x-level data with conductor exactly c and given piAngle set
std::vector<MultChar> enumerate_mult_chars(const LocalFieldCtx& F, int condExact, Angle piAngle);

// gauss_integral(mu, m) = int_{o^x} psi(a pi^m) mu^{-1}(a) d^x a  with the
// zeta-integral normalization vol(o^x) = 1 - 1/q.
cx gauss_integral(const MultChar& mu, int m);
// epsilon(1/2, mu, psi) for ramified mu (|eps| = 1)
cx epsilon_factor(const MultChar& mu);

// Character of L^x for a field extension, understood through a finite
// quotient of o_L^x together with a value on pi_L.  For characters whose
// restriction to o^x is trivial the orbit quotient keeps the groups small.
struct OmegaChar {
    const QuadExt* E = nullptr;
    int M = 0;
    std::shared_ptr<const OLQuotient> Q;
    std::vector<Angle> genAngles;
    Angle piLAngle;
    MultChar omegaPi;  // the restriction to F^x
    int cond = 0;

    Angle angle(const LElement& t) const;
    cx eval(const LElement& t) const { return angle(t).value(); }
    cx eval_inv(const LElement& t) const { return (-angle(t)).value(); }
    Angle angle_class(uint64_t label) const;  // unit-class shortcut
    bool is_trivial_on_units() const;
};

int omega_conductor(const OmegaChar& om);
OmegaChar build_omega(const QuadExt& E, int M, std::shared_ptr<const OLQuotient> Q,
                      std::vector<Angle> genAngles, Angle piLAngle, const MultChar& omegaPi);
// all Omega with Omega|_{F^x} = omegaPi and conductor exactly targetCond;
// for each unit-part, the ramified case contributes both pi_L-extensions
std::vector<OmegaChar> enumerate_omegas(const QuadExt& E, int targetCond,
                                        const MultChar& omegaPi, uint64_t cap = 2000000);

} // namespace gl2local
