#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "all2sat/enumerator.hpp"
#include "all2sat/row.hpp"

namespace all2sat {

// One canonical element per mirror pair of the core: the smaller id.
inline std::vector<int> choose_halfcore(const involution_poset& ip, const rigid_split& s) {
    std::vector<int> hc;
    for (std::size_t c = s.core.find_first(); c != bitvec::npos; c = s.core.find_next(c))
        if (static_cast<int>(c) < ip.omega(static_cast<int>(c))) hc.push_back(static_cast<int>(c));
    return hc;
}

inline bool is_valid_halfcore(const involution_poset& ip, const rigid_split& s,
                              const std::vector<int>& hc) {
    bitvec seen(static_cast<std::size_t>(ip.size()));
    for (int c : hc) {
        if (c < 0 || c >= ip.size()) return false;
        if (!s.core.test(static_cast<std::size_t>(c))) return false;
        if (seen.test(static_cast<std::size_t>(c)) ||
            seen.test(static_cast<std::size_t>(ip.omega(c))))
            return false;
        seen.set(static_cast<std::size_t>(c));
        seen.set(static_cast<std::size_t>(ip.omega(c)));
    }
    return 2 * hc.size() == s.core_size();
}

// Per-position conclusion tables over a halfcore layout, the decided
// position excluded: deciding p to 1 forces ones at c11[p] and zeros at
// c10[p]; deciding to 0 forces zeros at c00[p] and ones at c01[p].
struct conc_tables {
    std::shared_ptr<const row_layout> layout;
    std::vector<bitvec> c11, c10, c00, c01;

    int width() const { return layout->width(); }
    std::size_t total_size(int p) const {
        const std::size_t q = static_cast<std::size_t>(p);
        return c11[q].count() + c10[q].count() + c00[q].count() + c01[q].count();
    }
    bool totally_isolated(int p) const { return total_size(p) == 0; }
    int totally_isolated_count() const {
        int k = 0;
        for (int p = 0; p < width(); ++p)
            if (totally_isolated(p)) ++k;
        return k;
    }
};

inline conc_tables conclusion_tables(const involution_poset& ip, const rigid_split& s,
                                     const std::vector<int>& halfcore) {
    if (!is_valid_halfcore(ip, s, halfcore))
        throw std::invalid_argument("not a halfcore: need one core element per mirror pair");
    conc_tables t;
    t.layout = row_layout::over_subset(ip, s, halfcore);
    const int width = t.layout->width();
    for (int p = 0; p < width; ++p) {
        bitvec self(static_cast<std::size_t>(width));
        self.set(static_cast<std::size_t>(p));
        t.c11.push_back(t.layout->ones_when_one(p) - self);
        t.c10.push_back(t.layout->zeros_when_one(p));
        t.c00.push_back(t.layout->zeros_when_zero(p) - self);
        t.c01.push_back(t.layout->ones_when_zero(p));
    }
    return t;
}

// An undetermined position is special when neither of its two decisions
// would conclude anything not already in the row: every position it can
// force to 0 is 0 and every position it can force to 1 is 1. A special
// position therefore takes either value independently of the rest.
inline bool is_special(const conc_tables& t, const ternary_row& r, int p) {
    const std::size_t q = static_cast<std::size_t>(p);
    return t.c00[q].is_subset_of(r.zeros()) && t.c10[q].is_subset_of(r.zeros()) &&
           t.c11[q].is_subset_of(r.ones()) && t.c01[q].is_subset_of(r.ones());
}

inline bitvec special_twos(const conc_tables& t, const ternary_row& r) {
    bitvec sp(static_cast<std::size_t>(r.width()));
    const bitvec tw = r.twos();
    for (std::size_t p = tw.find_first(); p != bitvec::npos; p = tw.find_next(p))
        if (is_special(t, r, static_cast<int>(p))) sp.set(p);
    return sp;
}

// A halfcore row whose undetermined positions are all special, together
// with the number of models it stands for: 2 to the number of those
// positions.
struct model_cube {
    ternary_row row;
    mpz_class weight;
};

// LIFO walk over halfcore rows that splits only non-special undetermined
// positions; leaves are don't-care cubes. Special marks, once earned, are
// inherited by both children.
class cube_stream {
public:
    explicit cube_stream(std::shared_ptr<const analysis> a) : a_(std::move(a)) {
        if (!a_->satisfiable()) return;
        tables_ = conclusion_tables(*a_->poset, a_->rigid, choose_halfcore(*a_->poset, a_->rigid));
        const int width = tables_.width();
        priority_.resize(static_cast<std::size_t>(width));
        std::iota(priority_.begin(), priority_.end(), 0);
        std::stable_sort(priority_.begin(), priority_.end(), [&](int x, int y) {
            return tables_.total_size(x) > tables_.total_size(y);
        });
        std::optional<ternary_row> first =
            initial_row(*a_->poset, tables_.layout, detail::unit_elements(*a_), {});
        if (!first) return;
        stack_.push_back({std::move(*first), bitvec(static_cast<std::size_t>(width))});
        peak_stack_ = 1;
    }

    bool unsat() const { return stack_.empty() && emitted_ == 0; }

    const conc_tables& tables() const { return tables_; }

    std::optional<model_cube> next() {
        while (!stack_.empty()) {
            entry e = std::move(stack_.back());
            stack_.pop_back();
            const bitvec tw = e.row.twos();
            int split_at = -1;
            for (int p : priority_) {
                if (!tw.test(static_cast<std::size_t>(p))) continue;
                if (e.special.test(static_cast<std::size_t>(p))) continue;
                if (is_special(tables_, e.row, p)) {
                    e.special.set(static_cast<std::size_t>(p));
                    continue;
                }
                split_at = p;
                break;
            }
            if (split_at < 0) {
                ++emitted_;
                twos_total_ += tw.count();
                mpz_class weight = 1;
                weight <<= tw.count();
                return model_cube{std::move(e.row), std::move(weight)};
            }
            ++splits_;
            auto [hi, lo] = split_row(e.row, split_at);
            stack_.push_back({std::move(lo), e.special});
            stack_.push_back({std::move(hi), std::move(e.special)});
            peak_stack_ = std::max(peak_stack_, stack_.size());
        }
        return std::nullopt;
    }

    std::uint64_t cubes_emitted() const { return emitted_; }
    std::uint64_t splits() const { return splits_; }
    std::uint64_t twos_total() const { return twos_total_; }
    std::size_t peak_stack() const { return peak_stack_; }

private:
    struct entry {
        ternary_row row;
        bitvec special;
    };

    std::shared_ptr<const analysis> a_;
    conc_tables tables_;
    std::vector<int> priority_;
    std::vector<entry> stack_;
    std::uint64_t emitted_ = 0, splits_ = 0, twos_total_ = 0;
    std::size_t peak_stack_ = 0;
};

inline cube_stream enumerate_cubes(const cnf2& f) {
    return cube_stream(std::make_shared<const analysis>(analyze(f)));
}

struct count_result {
    mpz_class models;      // N
    std::uint64_t cubes = 0; // R
    double mean_twos = 0;  // unweighted mean of undetermined positions per cube
};

inline count_result count_models_of(std::shared_ptr<const analysis> a) {
    cube_stream cs(std::move(a));
    count_result out;
    out.models = 0;
    while (std::optional<model_cube> c = cs.next()) out.models += c->weight;
    out.cubes = cs.cubes_emitted();
    out.mean_twos = out.cubes ? static_cast<double>(cs.twos_total()) / static_cast<double>(out.cubes) : 0.0;
    return out;
}

inline count_result count_models(const cnf2& f) {
    return count_models_of(std::make_shared<const analysis>(analyze(f)));
}

// Expands a cube back into its models: undetermined positions run through
// all bitstrings, lowest position as bit 0 of the counter.
class cube_expansion {
public:
    cube_expansion(model_cube cube, std::shared_ptr<const analysis> a)
        : a_(std::move(a)), row_(std::move(cube.row)) {
        const bitvec tw = row_.twos();
        for (std::size_t p = tw.find_first(); p != bitvec::npos; p = tw.find_next(p))
            free_.push_back(p);
        limit_ = 1;
        limit_ <<= free_.size();
    }

    std::optional<assignment> next() {
        if (counter_ >= limit_) return std::nullopt;
        bitvec ones = row_.ones(), zeros = row_.zeros();
        for (std::size_t j = 0; j < free_.size(); ++j) {
            if (mpz_tstbit(counter_.get_mpz_t(), j))
                ones.set(free_[j]);
            else
                zeros.set(free_[j]);
        }
        ++counter_;
        return unpack(ternary_row(row_.layout_ptr(), std::move(ones), std::move(zeros)),
                      a_->components);
    }

private:
    std::shared_ptr<const analysis> a_;
    ternary_row row_;
    std::vector<std::size_t> free_;
    mpz_class counter_ = 0, limit_;
};

inline cube_expansion expand_cube(model_cube cube, std::shared_ptr<const analysis> a) {
    return cube_expansion(std::move(cube), std::move(a));
}

} // namespace all2sat
