#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gl2local/chars.hpp"

#include <random>

using namespace gl2local;

static bool close(cx a, cx b, double tol = 1e-9) { return std::abs(a - b) < tol; }

TEST_CASE("additive character psi") {
    LocalFieldCtx F(3, 8);
    AdditiveChar psi(F);
    CHECK(close(psi.eval(PAdic(F, 1)), cx(1, 0)));
    CHECK(close(psi.eval(PAdic(F, 7)), cx(1, 0)));
    // pi^{-1}: primitive cube root of unity
    cx z = psi.eval(PAdic::from_rational(F, 1, 3));
    CHECK(close(z * z * z, cx(1, 0)));
    CHECK(std::abs(z - cx(1, 0)) > 0.1);
    // homomorphism
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        PAdic x = PAdic(F, (long long)(rng() % 100) + 1).shift(-(int)(rng() % 4));
        PAdic y = PAdic(F, (long long)(rng() % 100) + 1).shift(-(int)(rng() % 4));
        CHECK(close(psi.eval(x + y), psi.eval(x) * psi.eval(y)));
        CHECK(close(psi.eval(x) * psi.eval(-x), cx(1, 0)));
    }
}

TEST_CASE("multiplicative character conductors") {
    LocalFieldCtx F(5, 8);
    auto triv = trivial_char(F);
    CHECK(conductor(triv) == 0);
    // order-4 character of (Z/5)^x has conductor 1
    auto chi = build_mult_char(F, 1, Angle(1, 4), Angle());
    CHECK(conductor(chi) == 1);
    // declared level 2 but trivial on 1+p: conductor snaps to 1
    auto g2 = UnitGroupModPc::get(F, 2);
    auto chi2 = build_mult_char(F, 2, Angle(1, 4), Angle());
    CHECK(conductor(chi2) == 1);
    CHECK((long long)g2->order % 4 == 0);
    // genuinely wild character at level 2
    auto chi3 = build_mult_char(F, 2, Angle(1, 20), Angle());
    CHECK(conductor(chi3) == 2);
    // unramified quadratic eta for inert L
    auto eta = unramified_char(F, Angle(1, 2));
    CHECK(conductor(eta) == 0);
    CHECK(close(eta.eval(PAdic(F, 5)), cx(-1, 0)));
    // multiplicativity on random pairs
    std::mt19937 rng(9);
    for (int i = 0; i < 200; ++i) {
        long long u1 = 1 + (long long)(rng() % 24);
        long long u2 = 1 + (long long)(rng() % 24);
        if (u1 % 5 == 0 || u2 % 5 == 0) continue;
        PAdic x(F, u1), y(F, u2);
        CHECK(close(chi3.eval(x * y), chi3.eval(x) * chi3.eval(y)));
    }
    // product and inverse
    auto prod = mc_mul(chi, mc_inv(chi));
    CHECK(conductor(prod) == 0);
    CHECK(prod.piAngle.is_zero());
}

TEST_CASE("gauss integrals and the epsilon factor") {
    LocalFieldCtx F(5, 8);
    auto triv = trivial_char(F);
    double q = 5;
    CHECK(close(gauss_integral(triv, -1), cx(-1.0 / q, 0)));
    CHECK(close(gauss_integral(triv, 0), cx(1 - 1.0 / q, 0)));
    CHECK(close(gauss_integral(triv, 3), cx(1 - 1.0 / q, 0)));
    CHECK(close(gauss_integral(triv, -2), cx(0, 0)));
    for (auto& mu : enumerate_mult_chars(F, 1, Angle())) {
        CHECK(std::abs(std::abs(epsilon_factor(mu)) - 1.0) < 1e-9);
        // vanishing off m = -c
        for (int m = -4; m <= 2; ++m)
            if (m != -1) CHECK(close(gauss_integral(mu, m), cx(0, 0)));
    }
    for (auto& mu : enumerate_mult_chars(F, 2, Angle(1, 3))) {
        CHECK(std::abs(std::abs(epsilon_factor(mu)) - 1.0) < 1e-9);
        for (int m = -4; m <= 2; ++m)
            if (m != -2) CHECK(close(gauss_integral(mu, m), cx(0, 0)));
    }
}

TEST_CASE("character orthogonality over unit quotients") {
    LocalFieldCtx F(3, 10);
    for (auto kind : {ExtCase::Inert, ExtCase::Ramified}) {
        auto E = make_ext(F, kind, 0);
        auto Q = OLQuotient::get(E, 2, true);
        auto ks = Q->G.char_index_begin();
        do {
            auto angles = Q->G.angles_for(ks);
            bool trivial = true;
            for (auto& a : angles) trivial &= a.is_zero();
            cx s = 0;
            for (uint64_t x : Q->G.elems) s += Q->G.char_angle(angles, x).value();
            if (trivial)
                CHECK(close(s, cx((double)Q->G.size(), 0), 1e-9));
            else
                CHECK(close(s, cx(0, 0), 1e-9));
        } while (Q->G.char_index_next(ks));
    }
}

TEST_CASE("omega enumeration: counts and restriction") {
    LocalFieldCtx F(3, 10);
    auto E = make_ext(F, ExtCase::Inert);
    auto triv = trivial_char(F);
    // conductor 1, trivial restriction: #characters of o_L^x/o^x(1+P_L) minus trivial = q
    auto oms = enumerate_omegas(E, 1, triv);
    CHECK(oms.size() == 3);
    for (auto& om : oms) {
        CHECK(om.cond == 1);
        // restriction constraint on scalar samples
        for (long long z : {2, 4, 5, 7}) {
            LElement t = E.scalar(PAdic(F, z));
            LElement s(E, PAdic(F, 1), PAdic(F, 1));
            CHECK(close(om.eval(t * s), om.eval(s)));
        }
    }
    // trivial omega has conductor 0
    auto om0 = enumerate_omegas(E, 0, triv);
    CHECK(om0.size() == 1);
    CHECK(om0[0].cond == 0);
    // ramified case: two pi_L-extensions per unit character
    auto Er = make_ext(F, ExtCase::Ramified, 0);
    auto omr = enumerate_omegas(Er, 1, triv);
    CHECK(omr.size() % 2 == 0);
    CHECK(!omr.empty());
    for (auto& om : omr) {
        CHECK(om.cond == 1);
        // Omega(pi) = 1
        LElement t = Er.scalar(PAdic(F, 3));
        CHECK(close(om.eval(t), cx(1, 0)));
    }
}

TEST_CASE("omega multiplicativity and conductor monotonicity") {
    LocalFieldCtx F(5, 10);
    auto E = make_ext(F, ExtCase::Ramified, 1);
    auto oms = enumerate_omegas(E, 2, trivial_char(F));
    REQUIRE(!oms.empty());
    auto& om = oms.front();
    std::mt19937 rng(21);
    for (int i = 0; i < 100; ++i) {
        LElement t1(E, PAdic(F, (long long)(rng() % 50) - 25), PAdic(F, (long long)(rng() % 50) - 25));
        LElement t2(E, PAdic(F, (long long)(rng() % 50) - 25), PAdic(F, (long long)(rng() % 50) - 25));
        bool ok1 = true, ok2 = true;
        try { t1.vL(); } catch (...) { ok1 = false; }
        try { t2.vL(); } catch (...) { ok2 = false; }
        if (!ok1 || !ok2) continue;
        if (t1.norm().is_zero() || t2.norm().is_zero()) continue;
        CHECK(close(om.eval(t1 * t2), om.eval(t1) * om.eval(t2)));
    }
    // c(Omega|_{F^x}) <= c(Omega) in the P_L-normalization: restriction is trivial here
    CHECK(om.omegaPi.cond <= om.cond);
}

TEST_CASE("general omega with nontrivial central character (full quotient)") {
    LocalFieldCtx F(3, 10);
    auto E = make_ext(F, ExtCase::Inert);
    // omega_pi of conductor 1: quadratic character of (Z/3)^x
    auto wpi = build_mult_char(F, 1, Angle(1, 2), Angle());
    auto oms = enumerate_omegas(E, 1, wpi, 100000);
    CHECK(!oms.empty());
    for (auto& om : oms) {
        CHECK(om.cond == 1);
        CHECK(close(om.eval(E.scalar(PAdic(F, 2))), wpi.eval(PAdic(F, 2))));
    }
}
