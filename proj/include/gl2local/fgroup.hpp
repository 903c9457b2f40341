#pragma once

#include "gl2local/rational.hpp"

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace gl2local {

// Structure of a concrete finite abelian group given by opaque u64 labels
// and a multiplication callback.  A basis (independent generators of
// prime-power order) is found per Sylow subgroup by the maximal-order
// greedy walk; every element gets a discrete-log vector on that basis.
struct FiniteAbelianGroup {
    std::vector<uint64_t> elems;
    uint64_t identity = 0;
    std::function<uint64_t(uint64_t, uint64_t)> mul;
    std::vector<uint64_t> basis;
    std::vector<long long> orders;
    std::unordered_map<uint64_t, std::vector<long long>> dlog;

    static FiniteAbelianGroup build(std::vector<uint64_t> elements, uint64_t identity,
                                    std::function<uint64_t(uint64_t, uint64_t)> mul,
                                    uint64_t cap = 2000000);

    size_t size() const { return elems.size(); }
    uint64_t pow(uint64_t g, long long e) const;
    long long element_order(uint64_t g) const;
    const std::vector<long long>& dlog_of(uint64_t x) const;

    // angle of the character with the given basis angles at x
    Angle char_angle(const std::vector<Angle>& genAngles, uint64_t x) const;

    // iterate all characters: angle tuple a_i = k_i / orders_i
    // visit(index tuple) -> angles produced via angles_for
    std::vector<Angle> angles_for(const std::vector<long long>& ks) const;
    uint64_t num_chars() const;
    std::vector<long long> char_index_begin() const;
    bool char_index_next(std::vector<long long>& ks) const;
};

} // namespace gl2local
