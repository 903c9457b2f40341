#include "gl2local/fgroup.hpp"

#include "gl2local/padic.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace gl2local {

uint64_t FiniteAbelianGroup::pow(uint64_t g, long long e) const {
    uint64_t r = identity;
    while (e > 0) {
        if (e & 1) r = mul(r, g);
        g = mul(g, g);
        e >>= 1;
    }
    return r;
}

long long FiniteAbelianGroup::element_order(uint64_t g) const {
    // order divides |G|; peel prime factors
    long long n = (long long)elems.size();
    long long ord = n;
    long long m = n;
    for (long long pr = 2; pr * pr <= m; ++pr)
        while (m % pr == 0) {
            m /= pr;
            while (ord % pr == 0 && pow(g, ord / pr) == identity) ord /= pr;
        }
    if (m > 1)
        while (ord % m == 0 && pow(g, ord / m) == identity) ord /= m;
    return ord;
}

static std::map<long long, int> factorize(long long n) {
    std::map<long long, int> f;
    for (long long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}

FiniteAbelianGroup FiniteAbelianGroup::build(std::vector<uint64_t> elements, uint64_t id,
                                             std::function<uint64_t(uint64_t, uint64_t)> mul,
                                             uint64_t cap) {
    if (elements.size() > cap) throw capacity_error("FiniteAbelianGroup: cap exceeded");
    FiniteAbelianGroup G;
    G.elems = std::move(elements);
    G.identity = id;
    G.mul = std::move(mul);

    long long n = (long long)G.elems.size();
    auto fac = factorize(n);

    // Sylow decomposition; find a basis of each Sylow by the maximal-order
    // greedy walk, correcting new generators so their power drops to 1.
    std::vector<uint64_t> basis;
    std::vector<long long> orders;
    for (auto [p, e] : fac) {
        long long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        long long cof = n / pe;
        // Sylow_p = images of x^cof
        std::unordered_set<uint64_t> syl;
        for (uint64_t x : G.elems) syl.insert(G.pow(x, cof));
        std::vector<std::pair<uint64_t, long long>> sylv;
        sylv.reserve(syl.size());
        for (uint64_t x : syl) sylv.push_back({x, G.element_order(x)});
        std::sort(sylv.begin(), sylv.end(),
                  [](auto& a, auto& b) { return a.second > b.second; });

        std::vector<uint64_t> pbasis;
        std::vector<long long> porders;
        // H = generated subgroup, with dlog vectors on pbasis
        std::unordered_map<uint64_t, std::vector<long long>> H;
        H[G.identity] = {};
        for (auto& [x, ordx] : sylv) {
            if (H.size() == syl.size()) break;
            if (H.count(x)) continue;
            // minimal p-power t with x^t in H
            long long t = 1;
            uint64_t xt = x;
            while (!H.count(xt)) {
                xt = G.pow(xt, p);
                t *= p;
            }
            // x^t = prod basis^e_i with t | e_i; correct
            std::vector<long long> e_vec = H[xt];
            uint64_t y = x;
            for (size_t i = 0; i < pbasis.size(); ++i) {
                long long ei = i < e_vec.size() ? e_vec[i] : 0;
                if (ei % t != 0)
                    throw arith_error("abelian basis: divisibility failed");
                long long ci = ei / t;
                long long oi = porders[i];
                long long exp = ((-ci) % oi + oi) % oi;
                y = G.mul(y, G.pow(pbasis[i], exp));
            }
            // y has order exactly t and <y> meets H trivially
            pbasis.push_back(y);
            porders.push_back(t);
            // extend H
            std::unordered_map<uint64_t, std::vector<long long>> H2;
            for (auto& [h, vec] : H) {
                uint64_t cur = h;
                for (long long j = 0; j < t; ++j) {
                    std::vector<long long> v = vec;
                    v.resize(pbasis.size(), 0);
                    v[pbasis.size() - 1] = j;
                    H2[cur] = std::move(v);
                    if (j + 1 < t) cur = G.mul(cur, y);
                }
            }
            H = std::move(H2);
        }
        if (H.size() != syl.size()) throw arith_error("abelian basis: Sylow not exhausted");
        for (size_t i = 0; i < pbasis.size(); ++i) {
            basis.push_back(pbasis[i]);
            orders.push_back(porders[i]);
        }
    }
    G.basis = basis;
    G.orders = orders;

    // global dlog table by closure over all basis elements
    G.dlog.clear();
    G.dlog[G.identity] = std::vector<long long>(basis.size(), 0);
    std::vector<uint64_t> frontier{G.identity};
    for (size_t i = 0; i < basis.size(); ++i) {
        std::unordered_map<uint64_t, std::vector<long long>> next;
        for (auto& [h, vec] : G.dlog) {
            uint64_t cur = h;
            for (long long j = 0; j < orders[i]; ++j) {
                auto v = vec;
                v[i] = j;
                next[cur] = std::move(v);
                if (j + 1 < orders[i]) cur = G.mul(cur, basis[i]);
            }
        }
        G.dlog = std::move(next);
    }
    if (G.dlog.size() != G.elems.size())
        throw arith_error("abelian basis: dlog table size mismatch");
    return G;
}

const std::vector<long long>& FiniteAbelianGroup::dlog_of(uint64_t x) const {
    auto it = dlog.find(x);
    if (it == dlog.end()) throw invalid_data_error("dlog_of: not a group element");
    return it->second;
}

Angle FiniteAbelianGroup::char_angle(const std::vector<Angle>& genAngles, uint64_t x) const {
    const auto& v = dlog_of(x);
    Angle a;
    for (size_t i = 0; i < v.size(); ++i) a = a + genAngles[i].times(v[i]);
    return a;
}

std::vector<Angle> FiniteAbelianGroup::angles_for(const std::vector<long long>& ks) const {
    std::vector<Angle> a(ks.size());
    for (size_t i = 0; i < ks.size(); ++i) a[i] = Angle(ks[i], orders[i]);
    return a;
}

uint64_t FiniteAbelianGroup::num_chars() const {
    uint64_t n = 1;
    for (long long o : orders) n *= (uint64_t)o;
    return n;
}

std::vector<long long> FiniteAbelianGroup::char_index_begin() const {
    return std::vector<long long>(orders.size(), 0);
}

bool FiniteAbelianGroup::char_index_next(std::vector<long long>& ks) const {
    for (size_t i = 0; i < ks.size(); ++i) {
        if (++ks[i] < orders[i]) return true;
        ks[i] = 0;
    }
    return false;
}

} // namespace gl2local
