#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "all2sat/literal.hpp"

namespace all2sat {

// Total assignment: values[i] is the value of variable i+1.
using assignment = std::vector<std::uint8_t>;

// Conjunction of two-literal clauses plus unit literals over variables
// 1..num_vars. Invariant after normalize(): clauses are deduplicated,
// non-tautological, genuinely binary; units are deduplicated and
// non-contradictory.
struct cnf2 {
    int num_vars = 0;
    std::vector<clause2> clauses;
    std::vector<literal> units;
};

// Convenience builder used throughout the tests and tools: DIMACS-coded
// clause lists, width 1 entries become units.
inline cnf2 make_cnf2(int num_vars, std::initializer_list<std::initializer_list<int>> rows) {
    cnf2 f;
    f.num_vars = num_vars;
    for (const auto& row : rows) {
        std::vector<int> lits(row);
        if (lits.size() == 1)
            f.units.push_back(literal::from_dimacs(lits[0]));
        else if (lits.size() == 2)
            f.clauses.emplace_back(literal::from_dimacs(lits[0]), literal::from_dimacs(lits[1]));
        else
            throw std::invalid_argument("make_cnf2: clause width must be 1 or 2");
    }
    return f;
}

// Drops tautologies, folds (u | u) into the unit u, deduplicates clauses and
// units. Returns nullopt when the units contain a complementary pair; the
// formula is then unsatisfiable outright and the digraph machinery never
// sees it.
inline std::optional<cnf2> normalize(const cnf2& f) {
    cnf2 out;
    out.num_vars = f.num_vars;
    out.units = f.units;
    for (const clause2& c : f.clauses) {
        if (c.tautological()) continue;
        if (c.degenerate())
            out.units.push_back(c.first());
        else
            out.clauses.push_back(c);
    }
    std::sort(out.clauses.begin(), out.clauses.end());
    out.clauses.erase(std::unique(out.clauses.begin(), out.clauses.end()), out.clauses.end());
    std::sort(out.units.begin(), out.units.end());
    out.units.erase(std::unique(out.units.begin(), out.units.end()), out.units.end());
    for (std::size_t i = 0; i + 1 < out.units.size(); ++i)
        if (out.units[i + 1] == ~out.units[i]) return std::nullopt;
    return out;
}

inline bool value_of(const assignment& a, literal l) {
    return static_cast<bool>(a[l.var() - 1]) != l.negated();
}

// True iff every clause has a true literal and every unit holds.
inline bool evaluate(const cnf2& f, const assignment& a) {
    if (static_cast<int>(a.size()) != f.num_vars)
        throw std::invalid_argument("evaluate: assignment length does not match variable count");
    for (const clause2& c : f.clauses)
        if (!value_of(a, c.first()) && !value_of(a, c.second())) return false;
    for (literal u : f.units)
        if (!value_of(a, u)) return false;
    return true;
}

} // namespace all2sat
