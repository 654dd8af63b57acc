#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "all2sat/compressed.hpp"
#include "all2sat/random_cnf.hpp"

namespace all2sat {

// One random instance, counted via cubes without materializing models.
struct experiment_record {
    int n = 0, t = 0;
    std::uint64_t seed = 0;
    bool satisfiable = false;
    double time_ms = 0;
    mpz_class models;               // N, 0 when unsatisfiable
    std::uint64_t cubes = 0;        // R
    double mean_twos = 0;           // unweighted mean of free positions per cube
    int components = 0;             // |W|
    int largest_component = 0;
    int halfcore_size = 0;
    int isolated = 0;               // totally isolated halfcore positions
};

inline experiment_record run_one(int n, int t, std::uint64_t seed) {
    experiment_record rec;
    rec.n = n;
    rec.t = t;
    rec.seed = seed;
    rec.models = 0;
    const cnf2 f = random_2cnf(n, t, seed);
    const auto start = std::chrono::steady_clock::now();
    auto a = std::make_shared<const analysis>(analyze(f));
    rec.components = a->components.count;
    for (const auto& m : a->components.members)
        rec.largest_component = std::max(rec.largest_component, static_cast<int>(m.size()));
    rec.satisfiable = a->satisfiable();
    if (rec.satisfiable) {
        cube_stream cs(a);
        while (std::optional<model_cube> c = cs.next()) rec.models += c->weight;
        rec.cubes = cs.cubes_emitted();
        rec.mean_twos = rec.cubes
                            ? static_cast<double>(cs.twos_total()) / static_cast<double>(rec.cubes)
                            : 0.0;
        rec.halfcore_size = static_cast<int>(a->rigid.core_size() / 2);
        rec.isolated = cs.tables().totally_isolated_count();
    }
    const auto stop = std::chrono::steady_clock::now();
    rec.time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return rec;
}

// Instance k uses seed base_seed + k; records come back in instance order.
inline std::vector<experiment_record> run_experiment(int n, int t, int instances,
                                                     std::uint64_t base_seed) {
    std::vector<experiment_record> out;
    out.reserve(static_cast<std::size_t>(instances));
    for (int k = 0; k < instances; ++k)
        out.push_back(run_one(n, t, base_seed + static_cast<std::uint64_t>(k)));
    return out;
}

} // namespace all2sat
