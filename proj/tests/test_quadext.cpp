#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gl2local/quadext.hpp"

#include <random>

using namespace gl2local;

TEST_CASE("classification of standard data") {
    LocalFieldCtx F(5, 10);
    // d = -4 = 1 mod 5, a square unit
    auto Es = build_quadratic_data(F, 1, 0, 1);
    CHECK(Es.kind == ExtCase::Split);
    CHECK(legendre_symbol(Es) == 1);
    // d = -8 = 2 mod 5, a nonsquare
    auto Ei = build_quadratic_data(F, 2, 0, 1);
    CHECK(Ei.kind == ExtCase::Inert);
    CHECK(Ei.va == 0);
    CHECK(legendre_symbol(Ei) == -1);
    CHECK(root_count_mod_p(Ei) == 0);
    // d = 4 - 24 = -20, valuation 1
    auto Er = build_quadratic_data(F, 2, 2, 3);
    CHECK(Er.kind == ExtCase::Ramified);
    CHECK(Er.u0 == 3);  // 3*9 + 2*3 + 2 = 35 = 0 mod 5
    CHECK(legendre_symbol(Er) == 0);
    CHECK(root_count_mod_p(Er) == 1);
    CHECK(root_count_mod_p(Ei) == legendre_symbol(Ei) + 1);
    CHECK(root_count_mod_p(Er) == legendre_symbol(Er) + 1);
}

TEST_CASE("invalid data rejected") {
    LocalFieldCtx F(5, 10);
    CHECK_THROWS_AS(build_quadratic_data(F, 25, 0, 1), invalid_data_error);   // v(d) = 2
    CHECK_THROWS_AS(build_quadratic_data(F, 1, 0, 5), invalid_data_error);    // c not unit
}

TEST_CASE("L arithmetic: norm, trace, conj") {
    LocalFieldCtx F(5, 10);
    auto E = build_quadratic_data(F, 2, 2, 3);
    auto one = E.one();
    CHECK(one.norm().eq(PAdic(F, 1)));
    auto beta = E.beta();
    // trace(beta) = b/c = 2 * 3^{-1} = 4 mod 5
    CHECK(beta.trace().residue(1) == 4);
    // norm(beta) = a/c, and beta * conj(beta) lands in F
    auto prod = beta * beta.conj();
    CHECK(prod.y.is_zero());
    CHECK(prod.x.eq(E.a / E.c));
    // ring laws on random elements
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        LElement z1(E, PAdic(F, (long long)(rng() % 100) - 50), PAdic(F, (long long)(rng() % 100) - 50));
        LElement z2(E, PAdic(F, (long long)(rng() % 100) - 50), PAdic(F, (long long)(rng() % 100) - 50));
        CHECK((z1 * z2).norm().eq(z1.norm() * z2.norm()));
        CHECK((z1 * z2).conj().eq(z1.conj() * z2.conj()));
    }
}

TEST_CASE("valuations: Lemma constraints and pi_L") {
    LocalFieldCtx F(5, 10);
    auto Ei = make_ext(F, ExtCase::Inert);
    CHECK(Ei.beta().vL() == 0);  // v_L(beta) = v(a) = 0 inert
    auto Er0 = make_ext(F, ExtCase::Ramified, 0);
    CHECK(Er0.va == 0);
    CHECK(Er0.beta().vL() == 0);
    auto Er1 = make_ext(F, ExtCase::Ramified, 1);
    CHECK(Er1.va == 1);
    CHECK(Er1.beta().vL() == 1);
    // pi_L has v_L = 1 and v_L(pi) = e
    for (auto* E : {&Er0, &Er1}) {
        CHECK(E->pi_L().vL() == 1);
        CHECK(E->scalar(PAdic(F, 5)).vL() == E->eLF);
    }
    CHECK(Ei.scalar(PAdic(F, 5)).vL() == 1);
}

TEST_CASE("P_L^n cap o = p^n by enumeration at small n") {
    LocalFieldCtx F(3, 8);
    for (auto kind : {ExtCase::Inert, ExtCase::Ramified}) {
        auto E = make_ext(F, kind, 0);
        for (int n = 0; n <= 2; ++n) {
            // scalars x with v_L(x) >= e*n are exactly those with v(x) >= n
            for (long long x = 1; x < 81; ++x) {
                PAdic xp(F, x);
                LElement z = E.scalar(xp);
                bool inPLn = z.vL() >= E.eLF * n;
                bool inPn = xp.val() >= n;
                CHECK(inPLn == inPn);
            }
        }
    }
}

TEST_CASE("xi0 coordinates round trip") {
    LocalFieldCtx F(7, 9);
    auto E = make_ext(F, ExtCase::Ramified, 0);
    LElement z(E, PAdic(F, 11), PAdic(F, 23));
    auto back = E.from_xi0(z.xi0_x(), z.xi0_y());
    CHECK(back.eq(z));
    // xi0 itself: norm = a*c
    CHECK(E.xi0().norm().eq(E.a * E.c));
}

TEST_CASE("split coordinates multiplicative") {
    LocalFieldCtx F(5, 10);
    auto E = build_quadratic_data(F, 1, 0, 1);
    LElement z1(E, PAdic(F, 3), PAdic(F, 4));
    LElement z2(E, PAdic(F, 2), PAdic(F, 9));
    auto [a1, b1] = E.split_coords(z1);
    auto [a2, b2] = E.split_coords(z2);
    auto [ap, bp] = E.split_coords(z1 * z2);
    CHECK(ap.eq(a1 * a2));
    CHECK(bp.eq(b1 * b2));
    CHECK(z1.norm().eq(a1 * b1));
}
