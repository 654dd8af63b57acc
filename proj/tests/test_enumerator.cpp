#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "all2sat/brute_force.hpp"
#include "all2sat/enumerator.hpp"
#include "all2sat/random_cnf.hpp"

using namespace all2sat;

namespace {

const cnf2& psip() {
    static cnf2 f = make_cnf2(7, {{1, -3}, {-1, -4}, {4, 3}, {-2, -4}, {-3, 5},
                                  {1, 5}, {1, 6}, {-5, -7}, {-6, -7}, {-2, 6}});
    return f;
}

const cnf2& psi() {
    static cnf2 f = make_cnf2(9, {{-7, -6}, {-9, -8}, {-8, -7}, {-8, 6}, {-6, 3},
                                  {-5, 3}, {3, 6}, {-2, 1}, {-1, 6}, {-5, -2},
                                  {-9, -1}, {-9, -2}, {-9, 4}, {-9, -7}, {-2, 4}});
    return f;
}

std::set<assignment> drain(model_stream& ms) {
    std::set<assignment> out;
    while (auto m = ms.next()) {
        auto [it, fresh] = out.insert(*m);
        CHECK(fresh); // each model exactly once
    }
    return out;
}

std::set<assignment> to_set(const std::vector<assignment>& v) {
    return std::set<assignment>(v.begin(), v.end());
}

} // namespace

TEST_CASE("the seven-variable fixture has exactly its four models") {
    model_stream ms = enumerate_models(psip());
    CHECK_FALSE(ms.unsat());
    std::set<assignment> expect = {{0, 0, 0, 1, 1, 1, 0},
                                   {1, 0, 1, 0, 1, 0, 0},
                                   {1, 0, 1, 0, 1, 1, 0},
                                   {1, 1, 1, 0, 1, 1, 0}};
    CHECK(drain(ms) == expect);
    CHECK(ms.models_emitted() == 4);
    CHECK(ms.splits() == 3);
}

TEST_CASE("the nine-variable fixture has thirty models") {
    model_stream ms = enumerate_models(psi());
    std::set<assignment> got = drain(ms);
    CHECK(got.size() == 30);
    CHECK(got == to_set(brute_force_models(psi())));
    CHECK(ms.splits() == 29);
}

TEST_CASE("initial row pinning a core element") {
    auto a = std::make_shared<const analysis>(analyze(psip()));
    auto layout = row_layout::over_core(*a->poset, a->rigid);
    const int cx1 = a->component_of(literal::positive(1));

    std::optional<ternary_row> r = initial_row(*a->poset, layout, {}, {cx1});
    REQUIRE(r);
    CHECK(saturated(*r));
    CHECK(r->decided()); // pinning [x1] to 0 decides the whole core

    auto value_of_comp = [&](int dimacs) {
        return r->value_at(layout->position_of(a->component_of(literal::from_dimacs(dimacs))));
    };
    CHECK(value_of_comp(1) == 0);
    CHECK(value_of_comp(2) == 0);
    CHECK(value_of_comp(-6) == 0);
    CHECK(value_of_comp(6) == 1);
    CHECK(value_of_comp(-1) == 1);
    CHECK(value_of_comp(-2) == 1);

    SECTION("contradictory pins clash") {
        CHECK_FALSE(initial_row(*a->poset, layout, {cx1}, {cx1}));
        // [x7] is rigid false; forcing it to 1 clashes with its own mirror
        const int cx7 = a->component_of(literal::positive(7));
        CHECK_FALSE(initial_row(*a->poset, layout, {cx7}, {}));
        // while forcing it to 0 merely restates the rigid part
        CHECK(initial_row(*a->poset, layout, {}, {cx7}).has_value());
    }
}

TEST_CASE("split keeps rows saturated, disjoint and mirrored") {
    std::mt19937_64 eng(59);
    int done = 0;
    while (done < 40) {
        const int n = 3 + static_cast<int>(eng() % 10);
        cnf2 f = random_2cnf(n, 1 + static_cast<int>(eng() % (2 * n)), eng());
        analysis a = analyze(f);
        if (!a.satisfiable()) continue;
        ++done;
        auto layout = row_layout::over_core(*a.poset, a.rigid);
        std::optional<ternary_row> row = initial_row(*a.poset, layout, {}, {});
        REQUIRE(row);
        while (!row->decided()) {
            const bitvec tw = row->twos();
            std::size_t pick = tw.find_first();
            for (std::size_t skip = eng() % tw.count(); skip; --skip) pick = tw.find_next(pick);
            auto [hi, lo] = split_row(*row, static_cast<int>(pick));
            for (const ternary_row* child : {&hi, &lo}) {
                CHECK_FALSE(child->ones().intersects(child->zeros()));
                CHECK(saturated(*child));
                // over the full core a decided element decides its mirror
                for (int p = 0; p < child->width(); ++p) {
                    const int mp = layout->position_of(
                        layout->omega_of(layout->element_at(p)));
                    if (child->value_at(p) == 2)
                        CHECK(child->value_at(mp) == 2);
                    else
                        CHECK(child->value_at(mp) == 1 - child->value_at(p));
                }
            }
            row = (eng() & 1) ? std::move(hi) : std::move(lo);
        }
        if (row->width() > 0)
            CHECK_THROWS_AS(split_row(*row, 0), std::invalid_argument);
    }
}

TEST_CASE("enumeration equals brute force on random instances") {
    std::mt19937_64 eng(61);
    for (int k = 0; k < 150; ++k) {
        const int n = 2 + static_cast<int>(eng() % 13);
        cnf2 f = random_2cnf(n, 1 + static_cast<int>(eng() % (2 * n)), eng());
        auto shared = std::make_shared<const analysis>(analyze(f));
        std::set<assignment> expect = to_set(brute_force_models(f));
        if (!shared->satisfiable()) {
            CHECK(expect.empty());
            model_stream none(shared);
            CHECK(none.unsat());
            continue;
        }
        model_stream ms(shared);
        CHECK(drain(ms) == expect);
        CHECK(ms.splits() == expect.size() - 1);
        CHECK(ms.peak_stack() <= 2 * static_cast<std::size_t>(shared->poset->size()) + 1);
    }
}

TEST_CASE("rigid components pin every model") {
    model_stream ms = enumerate_models(psip());
    std::size_t seen = 0;
    while (auto m = ms.next()) {
        ++seen;
        CHECK((*m)[4] == 1); // x5 rigid true
        CHECK((*m)[6] == 0); // x7 rigid false
    }
    CHECK(seen == 4);
}

TEST_CASE("unit literals act as built-in pins") {
    cnf2 f = psip();
    f.units.push_back(literal::negative(7)); // agrees with the rigid part
    model_stream ms = enumerate_models(f);
    CHECK(drain(ms).size() == 4);

    cnf2 g = psip();
    g.units.push_back(literal::positive(7)); // contradicts it
    model_stream bad = enumerate_models(g);
    CHECK(bad.unsat());
    CHECK_FALSE(bad.next());

    cnf2 h = psip();
    h.units.push_back(literal::positive(2)); // narrows the core
    model_stream hs = enumerate_models(h);
    CHECK(drain(hs) == std::set<assignment>{{1, 1, 1, 0, 1, 1, 0}});
}

TEST_CASE("unsatisfiable input yields an unsat stream") {
    cnf2 u4 = make_cnf2(2, {{-1, 2}, {-2, 1}, {-1, -2}, {1, 2}});
    model_stream ms = enumerate_models(u4);
    CHECK(ms.unsat());
    CHECK_FALSE(ms.next());
    CHECK(ms.models_emitted() == 0);

    cnf2 units = make_cnf2(2, {{1}, {-1}});
    model_stream ms2 = enumerate_models(units);
    CHECK(ms2.unsat());
}

TEST_CASE("constrained enumeration") {
    model_stream ms = enumerate_constrained(psi(), {literal::positive(8)}, {});
    std::set<assignment> got = drain(ms);
    CHECK(got.size() == 9);
    for (const auto& m : got) {
        CHECK(m[7] == 1);
        CHECK(evaluate(psi(), m));
    }

    SECTION("against brute force with random pins") {
        std::mt19937_64 eng(67);
        for (int k = 0; k < 120; ++k) {
            const int n = 3 + static_cast<int>(eng() % 8);
            cnf2 f = random_2cnf(n, 1 + static_cast<int>(eng() % (2 * n)), eng());
            const int v1 = 1 + static_cast<int>(eng() % n);
            int v2 = 1 + static_cast<int>(eng() % (n - 1));
            if (v2 >= v1) ++v2;
            const literal pin_true = literal::from_dimacs((eng() & 1 ? 1 : -1) * v1);
            const literal pin_false = literal::from_dimacs((eng() & 1 ? 1 : -1) * v2);
            model_stream cs = enumerate_constrained(f, {pin_true}, {pin_false});
            std::set<assignment> expect;
            for (const auto& m : brute_force_models(f))
                if (value_of(m, pin_true) && !value_of(m, pin_false)) expect.insert(m);
            CHECK(drain(cs) == expect);
        }
    }

    SECTION("bad pin sets are rejected") {
        CHECK_THROWS_AS(
            enumerate_constrained(psi(), {literal::positive(3)}, {literal::negative(3)}),
            std::invalid_argument);
        CHECK_THROWS_AS(enumerate_constrained(psi(), {literal::positive(10)}, {}),
                        std::out_of_range);
    }

    SECTION("pins contradicting the formula give unsat, not an error") {
        // x7 is rigid false in the seven-variable fixture
        model_stream bad = enumerate_constrained(psip(), {literal::positive(7)}, {});
        CHECK(bad.unsat());
    }
}

TEST_CASE("partial models of the seven-variable fixture") {
    partial_stream ps = enumerate_partial(psip(), {literal::positive(1), literal::positive(2)});
    std::set<std::vector<std::uint8_t>> got;
    while (auto pm = ps.next()) {
        REQUIRE(pm->lits.size() == 2);
        got.insert(pm->values);
    }
    CHECK(got == std::set<std::vector<std::uint8_t>>{{0, 0}, {1, 0}, {1, 1}});

    SECTION("request order and polarity are respected") {
        partial_stream neg = enumerate_partial(psip(), {literal::negative(2), literal::positive(1)});
        std::set<std::vector<std::uint8_t>> g2;
        while (auto pm = neg.next()) g2.insert(pm->values);
        CHECK(g2 == std::set<std::vector<std::uint8_t>>{{1, 0}, {1, 1}, {0, 1}});
    }

    SECTION("rigid-only requests collapse to one partial model") {
        partial_stream rigid = enumerate_partial(psip(), {literal::positive(5), literal::negative(7)});
        auto pm = rigid.next();
        REQUIRE(pm);
        CHECK(pm->values == std::vector<std::uint8_t>{1, 1});
        CHECK_FALSE(rigid.next());
    }

    SECTION("duplicate requests are deduplicated") {
        partial_stream dup = enumerate_partial(psip(), {literal::positive(1), literal::positive(1)});
        auto pm = dup.next();
        REQUIRE(pm);
        CHECK(pm->lits.size() == 1);
    }

    SECTION("argument validation") {
        CHECK_THROWS_AS(enumerate_partial(psip(), {}), std::invalid_argument);
        CHECK_THROWS_AS(enumerate_partial(psip(), {literal::positive(9)}), std::out_of_range);
    }

    SECTION("unsatisfiable formula") {
        cnf2 u4 = make_cnf2(2, {{-1, 2}, {-2, 1}, {-1, -2}, {1, 2}});
        partial_stream none = enumerate_partial(u4, {literal::positive(1)});
        CHECK(none.unsat());
        CHECK_FALSE(none.next());
    }
}

TEST_CASE("partial streams equal deduplicated projections") {
    std::mt19937_64 eng(71);
    for (int k = 0; k < 120; ++k) {
        const int n = 3 + static_cast<int>(eng() % 10);
        cnf2 f = random_2cnf(n, 1 + static_cast<int>(eng() % (2 * n)), eng());
        std::vector<literal> req;
        for (int v = 1; v <= n; ++v)
            if (eng() & 1) req.push_back(eng() & 1 ? literal::positive(v) : literal::negative(v));
        if (req.empty()) req.push_back(literal::positive(1));

        partial_stream ps = enumerate_partial(f, req);
        std::set<std::vector<std::uint8_t>> got;
        while (auto pm = ps.next()) {
            auto [it, fresh] = got.insert(pm->values);
            CHECK(fresh); // no partial model twice
        }
        std::set<std::vector<std::uint8_t>> expect;
        for (const auto& m : brute_force_models(f)) {
            std::vector<std::uint8_t> proj;
            proj.reserve(req.size());
            for (literal l : req) proj.push_back(value_of(m, l) ? 1 : 0);
            expect.insert(proj);
        }
        CHECK(got == expect);
    }
}
