#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "all2sat/cnf.hpp"

namespace all2sat {

// Implication digraph of a two-CNF: vertex 2(i-1) is x_i, vertex 2(i-1)+1 is
// ~x_i, and each clause (a | b) contributes the arcs ~a -> b and ~b -> a.
// Units are deliberately absent; they are folded into the enumeration as
// forced elements instead.
struct implication_digraph {
    int num_vars = 0;
    std::vector<std::vector<int>> arcs;

    std::size_t vertex_count() const { return arcs.size(); }
    std::size_t arc_count() const {
        std::size_t c = 0;
        for (const auto& a : arcs) c += a.size();
        return c;
    }
};

inline implication_digraph build_digraph(const cnf2& f) {
    implication_digraph g;
    g.num_vars = f.num_vars;
    g.arcs.assign(2 * static_cast<std::size_t>(f.num_vars), {});
    for (const clause2& c : f.clauses) {
        g.arcs[(~c.first()).index()].push_back(c.second().index());
        g.arcs[(~c.second()).index()].push_back(c.first().index());
    }
    return g;
}

// Strongly connected components plus the condensation. Component ids are
// assigned in completion order of Tarjan's algorithm, so every condensation
// arc points from a higher id to a lower one and id 0 is a sink.
struct component_partition {
    int count = 0;
    std::vector<int> component_of;            // vertex -> component id
    std::vector<std::vector<int>> members;    // component id -> vertices, ascending
    std::vector<std::vector<int>> successors; // condensation arcs, deduplicated
};

inline component_partition strong_components(const implication_digraph& g) {
    const int V = static_cast<int>(g.vertex_count());
    component_partition p;
    p.component_of.assign(V, -1);
    std::vector<int> disc(V, -1), low(V, 0);
    std::vector<int> scc_stack;
    std::vector<char> on_stack(V, 0);
    std::vector<std::pair<int, std::size_t>> frames; // vertex, next arc index
    int timer = 0;
    for (int s = 0; s < V; ++s) {
        if (disc[s] != -1) continue;
        disc[s] = low[s] = timer++;
        scc_stack.push_back(s);
        on_stack[s] = 1;
        frames.emplace_back(s, 0);
        while (!frames.empty()) {
            int v = frames.back().first;
            std::size_t i = frames.back().second;
            if (i < g.arcs[v].size()) {
                frames.back().second = i + 1;
                int w = g.arcs[v][i];
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    scc_stack.push_back(w);
                    on_stack[w] = 1;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().first] = std::min(low[frames.back().first], low[v]);
                if (low[v] == disc[v]) {
                    int id = p.count++;
                    std::vector<int> ms;
                    while (true) {
                        int w = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[w] = 0;
                        p.component_of[w] = id;
                        ms.push_back(w);
                        if (w == v) break;
                    }
                    std::sort(ms.begin(), ms.end());
                    p.members.push_back(std::move(ms));
                }
            }
        }
    }
    p.successors.assign(p.count, {});
    for (int v = 0; v < V; ++v)
        for (int w : g.arcs[v])
            if (p.component_of[v] != p.component_of[w])
                p.successors[p.component_of[v]].push_back(p.component_of[w]);
    for (auto& s : p.successors) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return p;
}

struct sat_status {
    bool satisfiable = false;
    std::optional<int> conflict_var; // least variable sharing a component with its negation
};

// A two-CNF without contradictory units is satisfiable iff no variable sits
// in the same strong component as its negation.
inline sat_status check_condition4(const component_partition& p) {
    const int n = static_cast<int>(p.component_of.size() / 2);
    for (int i = 1; i <= n; ++i)
        if (p.component_of[2 * (i - 1)] == p.component_of[2 * (i - 1) + 1])
            return {false, i};
    return {true, std::nullopt};
}

// Debug exports: one arc per line, "u v" over vertex indices.
inline std::string arcs_as_text(const implication_digraph& g) {
    std::ostringstream os;
    for (std::size_t v = 0; v < g.arcs.size(); ++v)
        for (int w : g.arcs[v]) os << v << ' ' << w << '\n';
    return os.str();
}

inline std::string condensation_as_text(const component_partition& p) {
    std::ostringstream os;
    for (int c = 0; c < p.count; ++c)
        for (int d : p.successors[c]) os << c << ' ' << d << '\n';
    return os.str();
}

} // namespace all2sat
