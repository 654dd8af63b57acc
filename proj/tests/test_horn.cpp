#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "all2sat/brute_force.hpp"
#include "all2sat/horn.hpp"

using namespace all2sat;

namespace {

const clause_set& mixed4() {
    static clause_set cs = make_clause_set(4, {{1, -2, -4}, {3, 4}, {1, -3, -4}, {1, 2}});
    return cs;
}

std::set<std::vector<int>> drain(renaming_stream& rs) {
    std::set<std::vector<int>> out;
    while (auto r = rs.next()) {
        auto [it, fresh] = out.insert(*r);
        CHECK(fresh);
    }
    return out;
}

clause_set random_clause_set(std::mt19937_64& eng, int n, int t) {
    clause_set cs;
    cs.num_vars = n;
    for (int k = 0; k < t; ++k) {
        const int width = 1 + static_cast<int>(eng() % std::min(n, 3));
        std::vector<int> vars(static_cast<std::size_t>(n));
        std::iota(vars.begin(), vars.end(), 1);
        std::shuffle(vars.begin(), vars.end(), eng);
        std::vector<literal> cl;
        for (int i = 0; i < width; ++i)
            cl.push_back(eng() & 1 ? literal::positive(vars[static_cast<std::size_t>(i)])
                                   : literal::negative(vars[static_cast<std::size_t>(i)]));
        std::sort(cl.begin(), cl.end());
        cs.clauses.push_back(std::move(cl));
    }
    return cs;
}

} // namespace

TEST_CASE("horn recognition") {
    CHECK_FALSE(is_horn(mixed4()));
    CHECK(is_horn(make_clause_set(3, {{-1, -2}, {-3}, {2, -1}})));
    CHECK(is_horn(make_clause_set(2, {})));
    CHECK_FALSE(is_horn(make_clause_set(2, {{1, 2}})));
}

TEST_CASE("renaming application") {
    clause_set flipped = apply_renaming(mixed4(), {1, 3});
    CHECK(is_horn(flipped));
    clause_set back = apply_renaming(flipped, {3, 1});
    CHECK(back.clauses == mixed4().clauses);
    CHECK_THROWS_AS(apply_renaming(mixed4(), {5}), std::out_of_range);
}

TEST_CASE("pair constraints of a clause set") {
    cnf2 sigma = build_sigma(mixed4());
    CHECK(sigma.num_vars == 4);
    CHECK(sigma.units.empty());
    std::set<clause2> got(sigma.clauses.begin(), sigma.clauses.end());
    auto c = [](int a, int b) {
        return clause2(literal::from_dimacs(a), literal::from_dimacs(b));
    };
    std::set<clause2> expect = {c(-4, -3), c(-2, -1), c(-1, 2), c(-1, 3),
                                c(-1, 4),  c(2, 4),   c(3, 4)};
    CHECK(got == expect);

    SECTION("width-one clauses constrain nothing") {
        cnf2 empty = build_sigma(make_clause_set(3, {{1}, {-2}, {3}}));
        CHECK(empty.clauses.empty());
        CHECK(empty.units.empty());
    }
}

TEST_CASE("renamings of the four-variable fixture") {
    renaming_stream rs = enumerate_renamings(mixed4());
    CHECK_FALSE(rs.none());
    std::set<std::vector<int>> got = drain(rs);
    std::set<std::vector<int>> expect = {{1, 3}, {1, 4}, {1, 2, 3}};
    CHECK(got == expect);
    CHECK(rs.renamings_emitted() == 3);
}

TEST_CASE("a clause set with no horn renaming") {
    clause_set cs = make_clause_set(3, {{1, 2, 3}, {-1, -2, -3}, {1, -2}, {2, -3}, {3, -1}});
    renaming_stream rs = enumerate_renamings(cs);
    CHECK(rs.none());
    CHECK_FALSE(rs.next());
    CHECK(rs.renamings_emitted() == 0);
    CHECK(brute_force_renamings(cs).empty());
}

TEST_CASE("width-one clause sets accept every renaming") {
    clause_set cs = make_clause_set(3, {{1}, {-2}, {3}});
    renaming_stream rs = enumerate_renamings(cs);
    CHECK(drain(rs).size() == 8);
}

TEST_CASE("renamings match brute force on random clause sets") {
    std::mt19937_64 eng(97);
    for (int k = 0; k < 100; ++k) {
        const int n = 2 + static_cast<int>(eng() % 7);
        clause_set cs = random_clause_set(eng, n, 1 + static_cast<int>(eng() % (2 * n)));
        renaming_stream rs = enumerate_renamings(cs);
        std::set<std::vector<int>> got = drain(rs);
        for (const auto& flip : got) CHECK(is_horn(apply_renaming(cs, flip)));
        const auto brute = brute_force_renamings(cs);
        CHECK(got == std::set<std::vector<int>>(brute.begin(), brute.end()));
    }
}

TEST_CASE("clause set parsing") {
    std::istringstream ok("c mixed widths\np cnf 4 3\n1 -2 -4 0\n3 4 0\n1 1 2 0\n");
    clause_set cs = parse_clause_set(ok);
    CHECK(cs.num_vars == 4);
    REQUIRE(cs.clauses.size() == 3);
    CHECK(cs.clauses[2].size() == 2); // repeated literal collapses

    std::istringstream bad("p cnf 2 1\n1 -1 0\n");
    CHECK_THROWS_MATCHES(parse_clause_set(bad), parse_error,
                         Catch::Matchers::Predicate<parse_error>(
                             [](const parse_error& e) { return e.line() == 2; }));

    CHECK_THROWS_AS(make_clause_set(2, {{1, -1}}), std::invalid_argument);
}
