#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "all2sat/cnf.hpp"
#include "all2sat/implication_graph.hpp"
#include "all2sat/poset.hpp"
#include "all2sat/row.hpp"

namespace all2sat {

// Everything derived once per formula: normalized input, digraph, strong
// components, satisfiability verdict, poset and rigid split. The poset is
// only built when the formula is satisfiable.
struct analysis {
    cnf2 formula;
    bool unit_contradiction = false;
    implication_digraph digraph;
    component_partition components;
    sat_status status;
    std::shared_ptr<const involution_poset> poset;
    rigid_split rigid;

    bool satisfiable() const { return !unit_contradiction && status.satisfiable; }

    int component_of(literal l) const {
        if (l.var() > formula.num_vars)
            throw std::out_of_range("literal " + l.str() + " out of range");
        return components.component_of[static_cast<std::size_t>(l.index())];
    }
};

inline analysis analyze(const cnf2& raw) {
    analysis a;
    std::optional<cnf2> norm = normalize(raw);
    if (!norm) {
        a.formula = raw;
        a.unit_contradiction = true;
        a.status = {false, std::nullopt};
        return a;
    }
    a.formula = std::move(*norm);
    a.digraph = build_digraph(a.formula);
    a.components = strong_components(a.digraph);
    a.status = check_condition4(a.components);
    if (a.status.satisfiable) {
        a.poset = std::make_shared<const involution_poset>(build_poset(a.components));
        a.rigid = compute_rigid_split(*a.poset);
    }
    return a;
}

namespace detail {

// Undetermined position whose up/down cone covers the most other
// undetermined positions; ties go to the lowest position (= lowest element
// id, layouts being ascending).
inline int pick_split(const ternary_row& r) {
    const row_layout& L = r.layout();
    const bitvec tw = r.twos();
    int best = -1;
    std::size_t best_gain = 0;
    for (std::size_t p = tw.find_first(); p != bitvec::npos; p = tw.find_next(p)) {
        const std::size_t gain =
            ((L.ones_when_one(static_cast<int>(p)) | L.zeros_when_zero(static_cast<int>(p))) & tw).count();
        if (best < 0 || gain > best_gain) {
            best = static_cast<int>(p);
            best_gain = gain;
        }
    }
    return best;
}

inline std::vector<int> unit_elements(const analysis& a) {
    std::vector<int> s;
    s.reserve(a.formula.units.size());
    for (literal u : a.formula.units) s.push_back(a.component_of(u));
    return s;
}

} // namespace detail

// Depth-first LIFO walk over ternary rows; every leaf is a model, and a row
// is split exactly models-below-it minus one times, so the walk is
// output-linear. Construction with pins whose rigid or closure requirements
// already clash yields an empty (unsat) stream.
class model_stream {
public:
    explicit model_stream(std::shared_ptr<const analysis> a,
                          const std::vector<literal>& pin_true = {},
                          const std::vector<literal>& pin_false = {})
        : a_(std::move(a)) {
        if (!a_->satisfiable()) return;
        std::vector<int> ones = detail::unit_elements(*a_);
        for (literal l : pin_true) ones.push_back(a_->component_of(l));
        std::vector<int> zeros;
        for (literal l : pin_false) zeros.push_back(a_->component_of(l));
        layout_ = row_layout::over_core(*a_->poset, a_->rigid);
        std::optional<ternary_row> first = initial_row(*a_->poset, layout_, ones, zeros);
        if (!first) return;
        stack_.push_back(std::move(*first));
        peak_stack_ = 1;
    }

    // No model will ever be produced. Meaningful from construction on.
    bool unsat() const { return stack_.empty() && emitted_ == 0; }

    std::optional<assignment> next() {
        while (!stack_.empty()) {
            ternary_row r = std::move(stack_.back());
            stack_.pop_back();
            if (r.decided()) {
                ++emitted_;
                return unpack(r, a_->components);
            }
            ++splits_;
            auto [hi, lo] = split_row(r, detail::pick_split(r));
            stack_.push_back(std::move(lo));
            stack_.push_back(std::move(hi));
            peak_stack_ = std::max(peak_stack_, stack_.size());
        }
        return std::nullopt;
    }

    std::uint64_t models_emitted() const { return emitted_; }
    std::uint64_t splits() const { return splits_; }
    std::size_t peak_stack() const { return peak_stack_; }

private:
    std::shared_ptr<const analysis> a_;
    std::shared_ptr<const row_layout> layout_;
    std::vector<ternary_row> stack_;
    std::uint64_t emitted_ = 0, splits_ = 0;
    std::size_t peak_stack_ = 0;
};

inline model_stream enumerate_models(const cnf2& f) {
    return model_stream(std::make_shared<const analysis>(analyze(f)));
}

// Models with the given literals pinned true resp. false. A variable
// appearing on both sides is a caller mistake, unlike a pin that merely
// contradicts the formula, which just yields an empty stream.
inline model_stream enumerate_constrained(const cnf2& f,
                                          const std::vector<literal>& pin_true,
                                          const std::vector<literal>& pin_false) {
    std::set<int> tv;
    for (literal l : pin_true) {
        if (l.var() > f.num_vars) throw std::out_of_range("literal " + l.str() + " out of range");
        tv.insert(l.var());
    }
    for (literal l : pin_false) {
        if (l.var() > f.num_vars) throw std::out_of_range("literal " + l.str() + " out of range");
        if (tv.count(l.var()))
            throw std::invalid_argument("variable " + std::to_string(l.var()) +
                                        " pinned both true and false");
    }
    return model_stream(std::make_shared<const analysis>(analyze(f)), pin_true, pin_false);
}

// Values of the requested literals, in request order.
struct partial_model {
    std::vector<literal> lits;
    std::vector<std::uint8_t> values;
};

// Enumerates each distinct restriction of a model to the requested literals
// exactly once: rows range over one canonical core element per requested
// mirror pair, so distinct leaves differ on some requested literal.
class partial_stream {
public:
    partial_stream(std::shared_ptr<const analysis> a, const std::vector<literal>& requested)
        : a_(std::move(a)) {
        for (literal l : requested)
            if (std::find(lits_.begin(), lits_.end(), l) == lits_.end()) lits_.push_back(l);
        if (!a_->satisfiable()) return;
        std::vector<int> subset;
        for (literal l : lits_) {
            const int c = a_->component_of(l);
            if (!a_->rigid.core.test(static_cast<std::size_t>(c))) continue;
            subset.push_back(std::min(c, a_->poset->omega(c)));
        }
        layout_ = row_layout::over_subset(*a_->poset, a_->rigid, std::move(subset));
        std::optional<ternary_row> first =
            initial_row(*a_->poset, layout_, detail::unit_elements(*a_), {});
        if (!first) return;
        stack_.push_back(std::move(*first));
        peak_stack_ = 1;
    }

    bool unsat() const { return stack_.empty() && emitted_ == 0; }

    std::optional<partial_model> next() {
        while (!stack_.empty()) {
            ternary_row r = std::move(stack_.back());
            stack_.pop_back();
            if (r.decided()) {
                ++emitted_;
                return read_off(r);
            }
            ++splits_;
            auto [hi, lo] = split_row(r, detail::pick_split(r));
            stack_.push_back(std::move(lo));
            stack_.push_back(std::move(hi));
            peak_stack_ = std::max(peak_stack_, stack_.size());
        }
        return std::nullopt;
    }

    std::uint64_t models_emitted() const { return emitted_; }
    std::uint64_t splits() const { return splits_; }
    std::size_t peak_stack() const { return peak_stack_; }

private:
    partial_model read_off(const ternary_row& r) const {
        partial_model pm;
        pm.lits = lits_;
        pm.values.reserve(lits_.size());
        const row_layout& L = r.layout();
        for (literal l : lits_) {
            const int c = a_->component_of(l);
            int v;
            if (L.rigid_one(c)) {
                v = 1;
            } else if (L.rigid_zero(c)) {
                v = 0;
            } else {
                const int p = L.position_of(c);
                v = p >= 0 ? r.value_at(p) : 1 - r.value_at(L.position_of(L.omega_of(c)));
            }
            pm.values.push_back(static_cast<std::uint8_t>(v));
        }
        return pm;
    }

    std::shared_ptr<const analysis> a_;
    std::vector<literal> lits_;
    std::shared_ptr<const row_layout> layout_;
    std::vector<ternary_row> stack_;
    std::uint64_t emitted_ = 0, splits_ = 0;
    std::size_t peak_stack_ = 0;
};

inline partial_stream enumerate_partial(const cnf2& f, const std::vector<literal>& requested) {
    if (requested.empty()) throw std::invalid_argument("no literals requested");
    for (literal l : requested)
        if (l.var() > f.num_vars) throw std::out_of_range("literal " + l.str() + " out of range");
    return partial_stream(std::make_shared<const analysis>(analyze(f)), requested);
}

} // namespace all2sat
