#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "all2sat/cnf.hpp"

namespace all2sat {

// t clauses over two distinct uniformly chosen variables with independent
// uniform polarities. Exactly four mt19937_64 draws per clause, in the
// order v1, v2, sign1, sign2, so instances are reproducible across
// platforms from the seed alone. The modulo step is biased by less than
// 2^-57 per draw, which is irrelevant here and keeps the scheme trivially
// restatable.
inline cnf2 random_2cnf(int n, int t, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need at least two variables");
    if (t < 1) throw std::invalid_argument("need at least one clause");
    std::mt19937_64 eng(seed);
    cnf2 f;
    f.num_vars = n;
    f.clauses.reserve(static_cast<std::size_t>(t));
    for (int k = 0; k < t; ++k) {
        const int v1 = 1 + static_cast<int>(eng() % static_cast<std::uint64_t>(n));
        int v2 = 1 + static_cast<int>(eng() % static_cast<std::uint64_t>(n - 1));
        if (v2 >= v1) ++v2;
        const bool neg1 = eng() & 1;
        const bool neg2 = eng() & 1;
        f.clauses.emplace_back(neg1 ? literal::negative(v1) : literal::positive(v1),
                               neg2 ? literal::negative(v2) : literal::positive(v2));
    }
    return f;
}

} // namespace all2sat
