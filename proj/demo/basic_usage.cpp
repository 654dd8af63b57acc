// Tour of the library API on a seven-variable formula: full enumeration,
// compressed cubes, a projection, and a Horn renaming query.

#include <iostream>

#include "all2sat/all2sat.hpp"

using namespace all2sat;

int main() {
    const cnf2 f = make_cnf2(7, {{1, -3}, {-1, -4}, {4, 3}, {-2, -4}, {-3, 5},
                                 {1, 5}, {1, 6}, {-5, -7}, {-6, -7}, {-2, 6}});

    std::cout << "models:\n";
    model_stream ms = enumerate_models(f);
    while (auto m = ms.next()) {
        for (auto v : *m) std::cout << int(v);
        std::cout << '\n';
    }

    count_result c = count_models(f);
    std::cout << "count: N=" << c.models.get_str() << " in " << c.cubes << " cubes\n";

    auto a = std::make_shared<const analysis>(analyze(f));
    cube_stream cubes(a);
    while (auto cube = cubes.next()) {
        std::uint64_t k = 0;
        cube_expansion ex = expand_cube(std::move(*cube), a);
        while (ex.next()) ++k;
        std::cout << "cube of " << k << " models\n";
    }

    std::cout << "x1 x2 can be:\n";
    partial_stream ps = enumerate_partial(f, {literal::positive(1), literal::positive(2)});
    while (auto pm = ps.next()) {
        for (auto v : pm->values) std::cout << int(v);
        std::cout << '\n';
    }

    const clause_set cs = make_clause_set(4, {{1, -2, -4}, {3, 4}, {1, -3, -4}, {1, 2}});
    std::cout << "variables to negate for Horn:\n";
    renaming_stream rs = enumerate_renamings(cs);
    while (auto r = rs.next()) {
        for (std::size_t i = 0; i < r->size(); ++i)
            std::cout << (i ? " " : "") << (*r)[i];
        std::cout << '\n';
    }
    return 0;
}
