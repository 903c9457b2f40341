#include "gl2local/unitgroups.hpp"

#include <map>
#include <mutex>

namespace gl2local {

std::shared_ptr<const UnitGroupModPc> UnitGroupModPc::get(const LocalFieldCtx& F, int c) {
    static std::mutex mtx;
    static std::map<std::pair<long long, int>, std::shared_ptr<const UnitGroupModPc>> cache;
    std::lock_guard<std::mutex> lk(mtx);
    auto key = std::make_pair(F.p, c);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    auto g = std::make_shared<UnitGroupModPc>();
    g->F = &F;
    g->c = c;
    if (c < 1) throw invalid_data_error("UnitGroupModPc: c >= 1");
    g->mod = F.pw(c);
    g->order = g->mod - g->mod / (uint64_t)F.p;
    // find a generator: the group is cyclic for odd p
    std::vector<uint64_t> primes;
    {
        uint64_t n = g->order;
        for (uint64_t p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                primes.push_back(p);
                while (n % p == 0) n /= p;
            }
        if (n > 1) primes.push_back(n);
    }
    for (uint64_t cand = 2; cand < g->mod; ++cand) {
        if (cand % (uint64_t)F.p == 0) continue;
        bool ok = true;
        for (uint64_t pr : primes)
            if (powmod(cand, g->order / pr, g->mod) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g->gen = cand;
            break;
        }
    }
    g->dlog.reserve(g->order * 2);
    uint64_t cur = 1;
    for (uint64_t e = 0; e < g->order; ++e) {
        g->dlog[cur] = e;
        cur = mulmod(cur, g->gen, g->mod);
    }
    cache[key] = g;
    return g;
}

uint64_t UnitGroupModPc::dlog_of(uint64_t u) const {
    auto it = dlog.find(u % mod);
    if (it == dlog.end()) throw invalid_data_error("dlog_of: not a unit");
    return it->second;
}

bool OLQuotient::is_unit_pair(uint64_t x, uint64_t y) const {
    const auto& F = *E->F;
    // norm(x + y beta) = x^2 + (b/c) x y + (a/c) y^2; unit test mod p
    uint64_t p = (uint64_t)F.p;
    uint64_t n = (mulmod(x, x, pM) + mulmod(bocR, mulmod(x, y, pM), pM) +
                  mulmod(aocR, mulmod(y, y, pM), pM)) % pM;
    return n % p != 0;
}

uint64_t OLQuotient::canon(uint64_t x, uint64_t y) const {
    x %= pM;
    y %= pM;
    if (!orbit) return encode(x, y);
    const auto& F = *E->F;
    uint64_t p = (uint64_t)F.p;
    if (x % p != 0) {
        uint64_t xi = invmod(x, pM);
        return encode(1, mulmod(y, xi, pM));
    }
    if (y % p == 0) throw invalid_data_error("canon: not a unit of o_L");
    uint64_t yi = invmod(y, pM);
    return encode(mulmod(x, yi, pM), 1);
}

uint64_t OLQuotient::mul_pairs(uint64_t l1, uint64_t l2) const {
    auto [x1, y1] = decode(l1);
    auto [x2, y2] = decode(l2);
    // (x1 + y1 b)(x2 + y2 b), b^2 = (b/c) b - a/c
    uint64_t yy = mulmod(y1, y2, pM);
    uint64_t xx = (mulmod(x1, x2, pM) + pM - mulmod(aocR, yy, pM)) % pM;
    uint64_t xy = (mulmod(x1, y2, pM) + mulmod(x2, y1, pM) + mulmod(bocR, yy, pM)) % pM;
    return canon(xx, xy);
}

uint64_t OLQuotient::class_of_unit(const LElement& z) const {
    uint64_t x = (uint64_t)(((z.x.is_zero() ? 0 : z.x.residue(M)) % (long long)pM + (long long)pM) % (long long)pM);
    uint64_t y = (uint64_t)(((z.y.is_zero() ? 0 : z.y.residue(M)) % (long long)pM + (long long)pM) % (long long)pM);
    if (!is_unit_pair(x, y)) throw invalid_data_error("class_of_unit: not a unit");
    return canon(x, y);
}

std::shared_ptr<const OLQuotient> OLQuotient::get(const QuadExt& E, int M, bool orbit,
                                                  uint64_t cap) {
    auto Q = std::make_shared<OLQuotient>();
    Q->E = &E;
    Q->M = M;
    Q->orbit = orbit;
    const auto& F = *E.F;
    if (M > F.N) throw precision_error("OLQuotient: M > N");
    Q->pM = M == 0 ? 1 : F.pw(M);
    if (M == 0) {
        // trivial quotient
        Q->aR = Q->bocR = Q->aocR = 0;
        Q->G = FiniteAbelianGroup::build({0}, 0, [](uint64_t, uint64_t) { return (uint64_t)0; });
        Q->levelGens = {};
        return Q;
    }
    uint64_t pM = Q->pM;
    Q->aR = (uint64_t)((E.a.residue(M) % (long long)pM + (long long)pM) % (long long)pM);
    uint64_t bR = (uint64_t)((E.b.residue(M) % (long long)pM + (long long)pM) % (long long)pM);
    uint64_t cR = (uint64_t)((E.c.residue(M) % (long long)pM + (long long)pM) % (long long)pM);
    uint64_t ci = invmod(cR, pM);
    Q->bocR = mulmod(bR, ci, pM);
    Q->aocR = mulmod(Q->aR, ci, pM);

    std::vector<uint64_t> elems;
    if (orbit) {
        // canonical orbit representatives (1, y), unit y-coords, and (x, 1) with x in p
        for (uint64_t y = 0; y < pM; ++y)
            if (Q->is_unit_pair(1, y)) elems.push_back(Q->encode(1, y));
        for (uint64_t x = 0; x < pM; x += (uint64_t)F.p)
            if (Q->is_unit_pair(x, 1)) elems.push_back(Q->encode(x, 1));
    } else {
        if (pM > cap) throw capacity_error("OLQuotient: full quotient too large");
        for (uint64_t x = 0; x < pM; ++x)
            for (uint64_t y = 0; y < pM; ++y)
                if (Q->is_unit_pair(x, y)) elems.push_back(Q->encode(x, y));
    }
    if (elems.size() > cap) throw capacity_error("OLQuotient: cap exceeded");
    auto self = Q.get();
    Q->G = FiniteAbelianGroup::build(
        std::move(elems), Q->canon(1, 0),
        [self](uint64_t a, uint64_t b) { return self->mul_pairs(a, b); }, cap);

    // generators of the image of (1 + P_L^m): elements 1 + pi^j (s + t beta),
    // j = m..M-1 and s,t residues, generate level by level
    Q->levelGens.resize(M + 1);
    for (int m = 1; m <= M; ++m) {
        std::vector<uint64_t> gens;
        for (int j = m; j < M; ++j) {
            uint64_t pj = F.pw(j);
            for (uint64_t s = 0; s < (uint64_t)F.p; ++s)
                for (uint64_t t = 0; t < (uint64_t)F.p; ++t) {
                    if (s == 0 && t == 0) continue;
                    uint64_t x = (1 + mulmod(pj, s, pM)) % pM;
                    uint64_t y = mulmod(pj, t, pM);
                    if (!Q->is_unit_pair(x, y)) continue;
                    gens.push_back(Q->canon(x, y));
                }
        }
        Q->levelGens[m] = gens;
    }
    return Q;
}

} // namespace gl2local
