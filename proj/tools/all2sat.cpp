#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "all2sat/all2sat.hpp"

using nlohmann::json;
using namespace all2sat;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_unsat = 20;
constexpr int exit_usage = 1;
constexpr int exit_parse = 2;

cnf2 load_cnf2(const std::string& path) {
    if (path == "-") return parse_dimacs(std::cin);
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open '" + path + "'");
    return parse_dimacs(in);
}

clause_set load_clause_set(const std::string& path) {
    if (path == "-") return parse_clause_set(std::cin);
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open '" + path + "'");
    return parse_clause_set(in);
}

std::vector<literal> parse_literal_list(const std::string& text) {
    std::vector<literal> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int code = std::stoi(item, &used);
        if (used != item.size() || code == 0)
            throw std::invalid_argument("bad literal '" + item + "'");
        out.push_back(literal::from_dimacs(code));
    }
    return out;
}

std::string bits_line(const assignment& a) {
    std::string s;
    s.reserve(a.size());
    for (auto v : a) s.push_back(v ? '1' : '0');
    return s;
}

std::string lits_line(const assignment& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::to_string(a[i] ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1));
        s += ' ';
    }
    s += '0';
    return s;
}

// Variable-level view of a halfcore row: rigid components print their fixed
// bit, decided positions their value (mirrored where the variable's
// component sits opposite the layout), free positions print 2. Distinct
// variables can share a free component, so the number of 2 characters may
// exceed the cube's free position count; the weight field is authoritative.
std::string cube_chars(const ternary_row& r, const component_partition& comps) {
    const int n = static_cast<int>(comps.component_of.size() / 2);
    const row_layout& L = r.layout();
    std::string s(static_cast<std::size_t>(n), '2');
    for (int i = 1; i <= n; ++i) {
        const int c = comps.component_of[2 * (i - 1)];
        if (L.rigid_one(c)) {
            s[i - 1] = '1';
        } else if (L.rigid_zero(c)) {
            s[i - 1] = '0';
        } else {
            int p = L.position_of(c);
            const bool mirrored = p < 0;
            if (mirrored) p = L.position_of(L.omega_of(c));
            const int v = r.value_at(p);
            if (v != 2) s[i - 1] = static_cast<char>('0' + (mirrored ? 1 - v : v));
        }
    }
    return s;
}

int run_enumerate(const std::string& path, const std::string& format, std::uint64_t limit) {
    const cnf2 f = load_cnf2(path);
    model_stream ms = enumerate_models(f);
    if (ms.unsat()) return exit_unsat;
    while (std::optional<assignment> m = ms.next()) {
        std::cout << (format == "lits" ? lits_line(*m) : bits_line(*m)) << '\n';
        if (limit && ms.models_emitted() >= limit) break;
    }
    return exit_ok;
}

int run_count(const std::string& path, bool as_json, bool dump_digraph, bool dump_condensation,
              bool dump_poset) {
    const cnf2 f = load_cnf2(path);
    auto a = std::make_shared<const analysis>(analyze(f));
    if (dump_digraph) std::cout << arcs_as_text(a->digraph);
    if (dump_condensation) std::cout << condensation_as_text(a->components);
    if (dump_poset && a->poset) {
        std::cout << hasse_as_text(*a->poset);
        std::cout << omega_as_text(*a->poset);
    }
    mpz_class n_models = 0;
    std::uint64_t cubes = 0;
    double av2 = 0;
    int hc = 0, ti = 0;
    if (a->satisfiable()) {
        cube_stream cs(a);
        while (std::optional<model_cube> c = cs.next()) n_models += c->weight;
        cubes = cs.cubes_emitted();
        av2 = cubes ? static_cast<double>(cs.twos_total()) / static_cast<double>(cubes) : 0.0;
        hc = static_cast<int>(a->rigid.core_size() / 2);
        ti = cs.tables().totally_isolated_count();
    }
    if (as_json) {
        json j{{"satisfiable", a->satisfiable()}, {"N", n_models.get_str()},
               {"R", cubes},                      {"av2", av2},
               {"W", a->components.count},        {"HC", hc},
               {"ti", ti}};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "satisfiable " << (a->satisfiable() ? "true" : "false") << '\n'
                  << "N " << n_models.get_str() << '\n'
                  << "R " << cubes << '\n'
                  << "av2 " << av2 << '\n'
                  << "W " << a->components.count << '\n'
                  << "HC " << hc << '\n'
                  << "ti " << ti << '\n';
    }
    return a->satisfiable() ? exit_ok : exit_unsat;
}

int run_cubes(const std::string& path, bool as_json, std::uint64_t limit) {
    const cnf2 f = load_cnf2(path);
    auto a = std::make_shared<const analysis>(analyze(f));
    cube_stream cs(a);
    if (cs.unsat()) return exit_unsat;
    while (std::optional<model_cube> c = cs.next()) {
        const std::string chars = cube_chars(c->row, a->components);
        if (as_json) {
            json j{{"bits", chars}, {"weight", c->weight.get_str()}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << chars << " #" << c->weight.get_str() << '\n';
        }
        if (limit && cs.cubes_emitted() >= limit) break;
    }
    return exit_ok;
}

int run_partial(const std::string& path, const std::string& lits, const std::string& format) {
    const cnf2 f = load_cnf2(path);
    partial_stream ps = enumerate_partial(f, parse_literal_list(lits));
    if (ps.unsat()) return exit_unsat;
    while (std::optional<partial_model> pm = ps.next()) {
        std::string s;
        for (std::size_t i = 0; i < pm->lits.size(); ++i) {
            if (format == "lits") {
                literal l = pm->values[i] ? pm->lits[i] : ~pm->lits[i];
                s += l.str();
                s += i + 1 < pm->lits.size() ? " " : "";
            } else {
                s.push_back(pm->values[i] ? '1' : '0');
            }
        }
        std::cout << s << '\n';
    }
    return exit_ok;
}

int run_constrain(const std::string& path, const std::string& pin_true,
                  const std::string& pin_false, const std::string& format,
                  std::uint64_t limit) {
    const cnf2 f = load_cnf2(path);
    model_stream ms =
        enumerate_constrained(f, parse_literal_list(pin_true), parse_literal_list(pin_false));
    if (ms.unsat()) return exit_unsat;
    while (std::optional<assignment> m = ms.next()) {
        std::cout << (format == "lits" ? lits_line(*m) : bits_line(*m)) << '\n';
        if (limit && ms.models_emitted() >= limit) break;
    }
    return exit_ok;
}

int run_horn(const std::string& path, bool as_json) {
    const clause_set cs = load_clause_set(path);
    renaming_stream rs = enumerate_renamings(cs);
    if (rs.none()) return exit_unsat;
    while (std::optional<std::vector<int>> r = rs.next()) {
        if (as_json) {
            json j = json::array();
            for (int v : *r) j.push_back(-v);
            std::cout << j.dump() << '\n';
        } else {
            std::string s;
            for (std::size_t i = 0; i < r->size(); ++i) {
                s += std::to_string(-(*r)[i]);
                if (i + 1 < r->size()) s += ' ';
            }
            std::cout << s << '\n';
        }
    }
    return exit_ok;
}

int run_bench(int n, int t, int instances, std::uint64_t seed, bool as_json) {
    const std::vector<experiment_record> recs = run_experiment(n, t, instances, seed);
    if (as_json) {
        json arr = json::array();
        for (const auto& r : recs) {
            arr.push_back(json{{"n", r.n},
                               {"t", r.t},
                               {"seed", r.seed},
                               {"satisfiable", r.satisfiable},
                               {"time_ms", r.time_ms},
                               {"N", r.models.get_str()},
                               {"R", r.cubes},
                               {"av2", r.mean_twos},
                               {"W", r.components},
                               {"largest_component", r.largest_component},
                               {"HC", r.halfcore_size},
                               {"ti", r.isolated}});
        }
        std::cout << arr.dump(2) << '\n';
    } else {
        std::cout << "n,t,seed,satisfiable,time_ms,N,R,av2,W,largest_component,HC,ti\n";
        for (const auto& r : recs) {
            std::cout << r.n << ',' << r.t << ',' << r.seed << ',' << (r.satisfiable ? 1 : 0)
                      << ',' << r.time_ms << ',' << r.models.get_str() << ',' << r.cubes << ','
                      << r.mean_twos << ',' << r.components << ',' << r.largest_component << ','
                      << r.halfcore_size << ',' << r.isolated << '\n';
        }
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"model enumeration for 2-CNF via strong-component posets"};
    app.require_subcommand(1);

    std::string file, format = "bits", lits, pin_true, pin_false;
    std::uint64_t limit = 0, seed = 1;
    bool as_json = false, dump_digraph = false, dump_condensation = false, dump_poset = false;
    int bn = 0, bt = 0, instances = 10;

    auto* c_enum = app.add_subcommand("enumerate", "list all models");
    c_enum->add_option("file", file, "DIMACS 2-CNF, or - for stdin")->required();
    c_enum->add_option("--format", format, "bits|lits")
        ->check(CLI::IsMember({"bits", "lits"}));
    c_enum->add_option("--limit", limit, "stop after this many models");

    auto* c_count = app.add_subcommand("count", "count models via cubes, report statistics");
    c_count->add_option("file", file, "DIMACS 2-CNF, or - for stdin")->required();
    c_count->add_flag("--json", as_json, "emit JSON");
    c_count->add_flag("--dump-digraph", dump_digraph, "print implication arcs first");
    c_count->add_flag("--dump-condensation", dump_condensation, "print condensation arcs first");
    c_count->add_flag("--dump-poset", dump_poset, "print cover relation and omega first");

    auto* c_cubes = app.add_subcommand("cubes", "list don't-care cubes");
    c_cubes->add_option("file", file, "DIMACS 2-CNF, or - for stdin")->required();
    c_cubes->add_flag("--json", as_json, "one JSON object per cube");
    c_cubes->add_option("--limit", limit, "stop after this many cubes");

    auto* c_partial = app.add_subcommand("partial", "project models onto chosen literals");
    c_partial->add_option("file", file, "DIMACS 2-CNF, or - for stdin")->required();
    c_partial->add_option("--lits", lits, "comma-separated signed literals")->required();
    c_partial->add_option("--format", format, "bits|lits")
        ->check(CLI::IsMember({"bits", "lits"}));

    auto* c_constrain = app.add_subcommand("constrain", "models with literals pinned");
    c_constrain->add_option("file", file, "DIMACS 2-CNF, or - for stdin")->required();
    c_constrain->add_option("--true", pin_true, "comma-separated literals pinned true");
    c_constrain->add_option("--false", pin_false, "comma-separated literals pinned false");
    c_constrain->add_option("--format", format, "bits|lits")
        ->check(CLI::IsMember({"bits", "lits"}));
    c_constrain->add_option("--limit", limit, "stop after this many models");

    auto* c_horn = app.add_subcommand("horn", "list renamings that make a CNF Horn");
    c_horn->add_option("file", file, "DIMACS CNF of any width, or - for stdin")->required();
    c_horn->add_flag("--json", as_json, "one JSON list per renaming");

    auto* c_bench = app.add_subcommand("bench", "random-instance statistics table");
    c_bench->add_option("--n", bn, "variables")->required();
    c_bench->add_option("--t", bt, "clauses")->required();
    c_bench->add_option("--instances", instances, "instance count");
    c_bench->add_option("--seed", seed, "base seed; instance k uses seed+k");
    c_bench->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (app.got_subcommand(c_enum)) return run_enumerate(file, format, limit);
        if (app.got_subcommand(c_count))
            return run_count(file, as_json, dump_digraph, dump_condensation, dump_poset);
        if (app.got_subcommand(c_cubes)) return run_cubes(file, as_json, limit);
        if (app.got_subcommand(c_partial)) return run_partial(file, lits, format);
        if (app.got_subcommand(c_constrain))
            return run_constrain(file, pin_true, pin_false, format, limit);
        if (app.got_subcommand(c_horn)) return run_horn(file, as_json);
        if (app.got_subcommand(c_bench)) return run_bench(bn, bt, instances, seed, as_json);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
