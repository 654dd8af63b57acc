#pragma once

#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "all2sat/cnf.hpp"

namespace all2sat {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

struct raw_dimacs {
    int num_vars = 0;
    int declared_clauses = 0;
    std::vector<std::vector<literal>> rows;
    std::vector<int> row_lines; // line each clause was terminated on
};

// Shared DIMACS scanner. Comment lines start with 'c', a '%' line ends the
// file (some benchmark suites append one), clauses are 0-terminated integer
// runs that may span lines. A declared clause count that disagrees with the
// body is tolerated; everything else is an error.
inline raw_dimacs read_dimacs(std::istream& in, int max_width) {
    raw_dimacs out;
    bool have_header = false;
    std::vector<literal> pending;
    int line_no = 0;
    int last_token_line = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == '%') break;
        if (line[0] == 'p') {
            if (have_header) throw parse_error(line_no, "duplicate problem line");
            std::istringstream hs(line);
            std::string p, fmt;
            if (!(hs >> p >> fmt >> out.num_vars >> out.declared_clauses) || fmt != "cnf")
                throw parse_error(line_no, "malformed problem line, expected 'p cnf <vars> <clauses>'");
            if (out.num_vars < 0 || out.declared_clauses < 0)
                throw parse_error(line_no, "negative count in problem line");
            have_header = true;
            continue;
        }
        if (!have_header) throw parse_error(line_no, "clause before problem line");
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw parse_error(line_no, "bad token '" + tok + "'");
            }
            last_token_line = line_no;
            if (v == 0) {
                if (pending.empty()) throw parse_error(line_no, "empty clause");
                if (max_width > 0 && static_cast<int>(pending.size()) > max_width)
                    throw parse_error(line_no, "clause wider than " + std::to_string(max_width) + " literals");
                out.rows.push_back(std::move(pending));
                out.row_lines.push_back(line_no);
                pending.clear();
            } else {
                if (std::abs(v) > out.num_vars)
                    throw parse_error(line_no, "variable " + std::to_string(std::abs(v)) + " out of range");
                pending.push_back(literal::from_dimacs(v));
            }
        }
    }
    if (!have_header) throw parse_error(line_no, "missing problem line");
    if (!pending.empty()) throw parse_error(last_token_line, "unterminated clause at end of input");
    return out;
}

} // namespace detail

// Strict two-CNF reader: width 1 rows become units, width 2 rows clauses,
// anything wider is rejected.
inline cnf2 parse_dimacs(std::istream& in) {
    detail::raw_dimacs raw = detail::read_dimacs(in, 2);
    cnf2 f;
    f.num_vars = raw.num_vars;
    for (auto& row : raw.rows) {
        if (row.size() == 1)
            f.units.push_back(row[0]);
        else
            f.clauses.emplace_back(row[0], row[1]);
    }
    return f;
}

inline std::string serialize_dimacs(const cnf2& f) {
    std::ostringstream os;
    os << "p cnf " << f.num_vars << ' ' << f.clauses.size() + f.units.size() << '\n';
    for (const clause2& c : f.clauses)
        os << c.first().to_dimacs() << ' ' << c.second().to_dimacs() << " 0\n";
    for (literal u : f.units)
        os << u.to_dimacs() << " 0\n";
    return os.str();
}

} // namespace all2sat
