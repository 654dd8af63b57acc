#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "all2sat/cnf.hpp"
#include "all2sat/horn.hpp"

namespace all2sat {

// Reference oracle: tries all 2^n assignments, variable i+1 on bit i.
inline std::vector<assignment> brute_force_models(const cnf2& f) {
    if (f.num_vars > 24)
        throw std::invalid_argument("brute force capped at 24 variables");
    std::vector<assignment> out;
    const std::uint64_t top = std::uint64_t(1) << f.num_vars;
    for (std::uint64_t mask = 0; mask < top; ++mask) {
        assignment a(static_cast<std::size_t>(f.num_vars));
        for (int i = 0; i < f.num_vars; ++i) a[i] = (mask >> i) & 1;
        if (evaluate(f, a)) out.push_back(std::move(a));
    }
    return out;
}

// Reference oracle for renamings: tries all 2^n polarity flips.
inline std::vector<std::vector<int>> brute_force_renamings(const clause_set& cs) {
    if (cs.num_vars > 24)
        throw std::invalid_argument("brute force capped at 24 variables");
    std::vector<std::vector<int>> out;
    const std::uint64_t top = std::uint64_t(1) << cs.num_vars;
    for (std::uint64_t mask = 0; mask < top; ++mask) {
        std::vector<int> flip;
        for (int i = 0; i < cs.num_vars; ++i)
            if ((mask >> i) & 1) flip.push_back(i + 1);
        if (is_horn(apply_renaming(cs, flip))) out.push_back(std::move(flip));
    }
    return out;
}

} // namespace all2sat
