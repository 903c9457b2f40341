#pragma once

#include "gl2local/fgroup.hpp"
#include "gl2local/quadext.hpp"

#include <memory>

namespace gl2local {

// (o/p^c)^x, cyclic for odd p, with a fixed generator and dlog table.
struct UnitGroupModPc {
    const LocalFieldCtx* F = nullptr;
    int c = 0;
    uint64_t mod = 1;
    uint64_t gen = 1;
    uint64_t order = 1;
    std::unordered_map<uint64_t, uint64_t> dlog;

    static std::shared_ptr<const UnitGroupModPc> get(const LocalFieldCtx& F, int c);
    uint64_t dlog_of(uint64_t u) const;
};

// A finite quotient of o_L^x.  Full: o_L^x/(1+P_L^M).  Orbit: the further
// quotient by the image of o^x (used for characters trivial on F^x units).
// Element labels encode the canonical representative pair (x, y), meaning
// x + y*beta with 0 <= x, y < p^M.
struct OLQuotient {
    const QuadExt* E = nullptr;
    int M = 0;
    bool orbit = false;
    uint64_t pM = 1;
    uint64_t aR = 0, bocR = 0, aocR = 0;  // a, b/c, a/c mod p^M
    FiniteAbelianGroup G;
    std::vector<std::vector<uint64_t>> levelGens;  // images of 1+P^m generators, m = 1..M

    static std::shared_ptr<const OLQuotient> get(const QuadExt& E, int M, bool orbit,
                                                 uint64_t cap = 2000000);

    uint64_t encode(uint64_t x, uint64_t y) const { return x * pM + y; }
    std::pair<uint64_t, uint64_t> decode(uint64_t l) const { return {l / pM, l % pM}; }
    uint64_t mul_pairs(uint64_t l1, uint64_t l2) const;
    uint64_t canon(uint64_t x, uint64_t y) const;   // orbit canonical form (or identity map)
    bool is_unit_pair(uint64_t x, uint64_t y) const;
    uint64_t class_of_unit(const LElement& z) const;  // z must satisfy vL(z) = 0

    // label of the class of a scalar unit u in o^x (full quotient only useful)
    uint64_t class_of_scalar(uint64_t u) const { return canon(u % pM, 0); }
};

} // namespace gl2local
