#pragma once

#include <algorithm>
#include <initializer_list>
#include <istream>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "all2sat/cnf.hpp"
#include "all2sat/dimacs.hpp"
#include "all2sat/enumerator.hpp"

namespace all2sat {

// CNF of arbitrary clause width. Clauses are sorted and deduplicated within
// themselves and never contain a complementary literal pair.
struct clause_set {
    int num_vars = 0;
    std::vector<std::vector<literal>> clauses;
};

inline clause_set parse_clause_set(std::istream& in) {
    detail::raw_dimacs raw = detail::read_dimacs(in, 0);
    clause_set cs;
    cs.num_vars = raw.num_vars;
    for (std::size_t k = 0; k < raw.rows.size(); ++k) {
        std::vector<literal>& row = raw.rows[k];
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            if (row[i + 1] == ~row[i])
                throw parse_error(raw.row_lines[k], "clause contains a literal and its negation");
        cs.clauses.push_back(std::move(row));
    }
    return cs;
}

inline clause_set make_clause_set(int num_vars,
                                  std::initializer_list<std::initializer_list<int>> rows) {
    clause_set cs;
    cs.num_vars = num_vars;
    for (const auto& row : rows) {
        std::vector<literal> cl;
        for (int code : row) cl.push_back(literal::from_dimacs(code));
        std::sort(cl.begin(), cl.end());
        cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
        for (std::size_t i = 0; i + 1 < cl.size(); ++i)
            if (cl[i + 1] == ~cl[i])
                throw std::invalid_argument("clause contains a literal and its negation");
        cs.clauses.push_back(std::move(cl));
    }
    return cs;
}

// At most one positive literal per clause.
inline bool is_horn(const clause_set& cs) {
    for (const auto& cl : cs.clauses) {
        int pos = 0;
        for (literal l : cl)
            if (!l.negated() && ++pos > 1) return false;
    }
    return true;
}

// Flips the polarity of the listed variables everywhere.
inline clause_set apply_renaming(const clause_set& cs, const std::vector<int>& flip_vars) {
    std::set<int> flip;
    for (int v : flip_vars) {
        if (v < 1 || v > cs.num_vars)
            throw std::out_of_range("variable " + std::to_string(v) + " out of range");
        flip.insert(v);
    }
    clause_set out;
    out.num_vars = cs.num_vars;
    for (const auto& cl : cs.clauses) {
        std::vector<literal> r;
        r.reserve(cl.size());
        for (literal l : cl) r.push_back(flip.count(l.var()) ? ~l : l);
        std::sort(r.begin(), r.end());
        out.clauses.push_back(std::move(r));
    }
    return out;
}

// The two-CNF whose models are exactly the renamings making cs Horn: for
// every pair of distinct literals u, w inside one clause, at most one of
// them may end up positive, which is the clause (~u | ~w) over the
// renaming variables.
inline cnf2 build_sigma(const clause_set& cs) {
    cnf2 sigma;
    sigma.num_vars = cs.num_vars;
    for (const auto& cl : cs.clauses)
        for (std::size_t i = 0; i < cl.size(); ++i)
            for (std::size_t j = i + 1; j < cl.size(); ++j)
                sigma.clauses.emplace_back(~cl[i], ~cl[j]);
    std::optional<cnf2> norm = normalize(sigma);
    if (!norm) throw std::logic_error("sigma has no units, normalize cannot fail");
    return *norm;
}

// A renaming is reported as the sorted list of variables to negate. The
// sigma model g corresponds to negating exactly the variables with g = 0.
class renaming_stream {
public:
    explicit renaming_stream(const clause_set& cs)
        : ms_(std::make_shared<const analysis>(analyze(build_sigma(cs)))) {}

    bool none() const { return ms_.unsat(); }

    std::optional<std::vector<int>> next() {
        std::optional<assignment> m = ms_.next();
        if (!m) return std::nullopt;
        std::vector<int> flip;
        for (std::size_t i = 0; i < m->size(); ++i)
            if (!(*m)[i]) flip.push_back(static_cast<int>(i) + 1);
        return flip;
    }

    std::uint64_t renamings_emitted() const { return ms_.models_emitted(); }

private:
    model_stream ms_;
};

inline renaming_stream enumerate_renamings(const clause_set& cs) {
    return renaming_stream(cs);
}

} // namespace all2sat
