#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "all2sat/poset.hpp"

namespace all2sat {

// Positions of a ternary row: a fixed ascending subset of core elements,
// plus the conclusion masks that say which positions flip to 1 or 0 when a
// position is decided. The full core, a halfcore, and a projection subset
// are all instances of the same layout. Masks are over positions, so the
// layout keeps no reference to the poset it was built from.
class row_layout {
public:
    static std::shared_ptr<const row_layout>
    over_core(const involution_poset& ip, const rigid_split& s) {
        return over_subset(ip, s, s.core.to_indices());
    }

    static std::shared_ptr<const row_layout>
    over_subset(const involution_poset& ip, const rigid_split& s, std::vector<int> elements) {
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        for (int e : elements) {
            if (e < 0 || e >= ip.size())
                throw std::out_of_range("layout element " + std::to_string(e) + " out of range");
            if (!s.core.test(static_cast<std::size_t>(e)))
                throw std::invalid_argument("layout element " + std::to_string(e) + " is rigid");
        }
        auto lay = std::make_shared<row_layout>();
        lay->elements_ = std::move(elements);
        const std::size_t width = lay->elements_.size();
        const std::size_t w = static_cast<std::size_t>(ip.size());
        lay->pos_.assign(w, -1);
        for (std::size_t p = 0; p < width; ++p)
            lay->pos_[static_cast<std::size_t>(lay->elements_[p])] = static_cast<int>(p);
        lay->rigid_one_ = s.filter;
        lay->rigid_zero_ = s.ideal;
        lay->omega_.resize(w);
        for (int c = 0; c < ip.size(); ++c) lay->omega_[static_cast<std::size_t>(c)] = ip.omega(c);
        lay->ones_when_one_.assign(width, bitvec(width));
        lay->zeros_when_one_.assign(width, bitvec(width));
        lay->zeros_when_zero_.assign(width, bitvec(width));
        lay->ones_when_zero_.assign(width, bitvec(width));
        for (std::size_t p = 0; p < width; ++p) {
            const int e = lay->elements_[p];
            for (std::size_t q = 0; q < width; ++q) {
                const int d = lay->elements_[q];
                if (ip.leq(e, d)) lay->ones_when_one_[p].set(q);
                if (ip.leq(e, ip.omega(d))) lay->zeros_when_one_[p].set(q);
                if (ip.leq(d, e)) lay->zeros_when_zero_[p].set(q);
                if (ip.leq(ip.omega(d), e)) lay->ones_when_zero_[p].set(q);
            }
        }
        return lay;
    }

    int width() const { return static_cast<int>(elements_.size()); }

    int element_at(int p) const {
        check_pos(p);
        return elements_[static_cast<std::size_t>(p)];
    }
    int position_of(int element) const {
        check_elem(element);
        return pos_[static_cast<std::size_t>(element)];
    }
    bool rigid_one(int element) const {
        check_elem(element);
        return rigid_one_.test(static_cast<std::size_t>(element));
    }
    bool rigid_zero(int element) const {
        check_elem(element);
        return rigid_zero_.test(static_cast<std::size_t>(element));
    }
    int omega_of(int element) const {
        check_elem(element);
        return omega_[static_cast<std::size_t>(element)];
    }

    // Conclusions of deciding position p, self included.
    const bitvec& ones_when_one(int p) const { check_pos(p); return ones_when_one_[static_cast<std::size_t>(p)]; }
    const bitvec& zeros_when_one(int p) const { check_pos(p); return zeros_when_one_[static_cast<std::size_t>(p)]; }
    const bitvec& zeros_when_zero(int p) const { check_pos(p); return zeros_when_zero_[static_cast<std::size_t>(p)]; }
    const bitvec& ones_when_zero(int p) const { check_pos(p); return ones_when_zero_[static_cast<std::size_t>(p)]; }

private:
    void check_pos(int p) const {
        if (p < 0 || p >= width())
            throw std::out_of_range("row position " + std::to_string(p) + " out of range");
    }
    void check_elem(int e) const {
        if (e < 0 || e >= static_cast<int>(pos_.size()))
            throw std::out_of_range("poset element " + std::to_string(e) + " out of range");
    }

    std::vector<int> elements_; // position -> element, ascending
    std::vector<int> pos_;      // element -> position or -1
    bitvec rigid_one_, rigid_zero_;
    std::vector<int> omega_;
    std::vector<bitvec> ones_when_one_, zeros_when_one_, zeros_when_zero_, ones_when_zero_;
};

// A row assigns each layout position 1, 0 or 2 (undetermined), the 1s and 0s
// kept as two disjoint bitsets.
class ternary_row {
public:
    ternary_row(std::shared_ptr<const row_layout> lay, bitvec ones, bitvec zeros)
        : lay_(std::move(lay)), ones_(std::move(ones)), zeros_(std::move(zeros)) {}

    const row_layout& layout() const { return *lay_; }
    std::shared_ptr<const row_layout> layout_ptr() const { return lay_; }

    int width() const { return lay_->width(); }
    const bitvec& ones() const { return ones_; }
    const bitvec& zeros() const { return zeros_; }
    bitvec twos() const { return ~(ones_ | zeros_); }

    int value_at(int p) const {
        if (p < 0 || p >= width())
            throw std::out_of_range("row position " + std::to_string(p) + " out of range");
        if (ones_.test(static_cast<std::size_t>(p))) return 1;
        if (zeros_.test(static_cast<std::size_t>(p))) return 0;
        return 2;
    }

    bool decided() const { return ones_.count() + zeros_.count() == static_cast<std::size_t>(width()); }

    friend std::optional<ternary_row> initial_row(const involution_poset&,
                                                  std::shared_ptr<const row_layout>,
                                                  const std::vector<int>&,
                                                  const std::vector<int>&);
    friend std::pair<ternary_row, ternary_row> split_row(const ternary_row&, int);

private:
    std::shared_ptr<const row_layout> lay_;
    bitvec ones_, zeros_;
};

// Builds the starting row: elements of force_one are pinned to 1, elements
// of force_zero to 0, the conclusions are closed over the whole poset and
// then projected onto the layout. A single closure pass suffices: a freshly
// forced up-set is already up-closed and its mirror down-closed, so nothing
// cascades. Closing over all of W, not just the layout, is what catches
// contradictions whose witnesses fall outside the projection. Returns
// nullopt when the pins contradict each other or a rigid element.
inline std::optional<ternary_row> initial_row(const involution_poset& ip,
                                              std::shared_ptr<const row_layout> lay,
                                              const std::vector<int>& force_one,
                                              const std::vector<int>& force_zero) {
    const std::size_t w = static_cast<std::size_t>(ip.size());
    bitvec raised(w), lowered(w);
    for (int e : force_one) raised |= ip.up_set(e);
    for (int e : force_zero) lowered |= ip.down_set(e);
    bitvec ones = raised | ip.omega_image(lowered);
    bitvec zeros = lowered | ip.omega_image(raised);
    if (ones.intersects(zeros)) return std::nullopt;
    const std::size_t width = static_cast<std::size_t>(lay->width());
    bitvec po(width), pz(width);
    for (std::size_t p = 0; p < width; ++p) {
        const std::size_t e = static_cast<std::size_t>(lay->element_at(static_cast<int>(p)));
        if (ones.test(e)) po.set(p);
        else if (zeros.test(e)) pz.set(p);
    }
    return ternary_row(std::move(lay), std::move(po), std::move(pz));
}

// Splits an undetermined position into the (value 1, value 0) pair of child
// rows. After a clash-free initial row no split can clash, which the
// asserts below re-state.
inline std::pair<ternary_row, ternary_row> split_row(const ternary_row& r, int p) {
    if (r.value_at(p) != 2)
        throw std::invalid_argument("split position " + std::to_string(p) + " is already decided");
    const row_layout& L = r.layout();
    ternary_row hi(r.lay_, r.ones_ | L.ones_when_one(p), r.zeros_ | L.zeros_when_one(p));
    ternary_row lo(r.lay_, r.ones_ | L.ones_when_zero(p), r.zeros_ | L.zeros_when_zero(p));
    assert(!hi.ones_.intersects(hi.zeros_));
    assert(!lo.ones_.intersects(lo.zeros_));
    return {std::move(hi), std::move(lo)};
}

// Every decided position has all its conclusions applied. Test hook.
inline bool saturated(const ternary_row& r) {
    const row_layout& L = r.layout();
    for (int p = 0; p < r.width(); ++p) {
        if (r.value_at(p) == 1 &&
            (!L.ones_when_one(p).is_subset_of(r.ones()) ||
             !L.zeros_when_one(p).is_subset_of(r.zeros())))
            return false;
        if (r.value_at(p) == 0 &&
            (!L.zeros_when_zero(p).is_subset_of(r.zeros()) ||
             !L.ones_when_zero(p).is_subset_of(r.ones())))
            return false;
    }
    return true;
}

// Reads a fully decided row over a layout covering the core (directly or
// via mirrors) back into a variable assignment.
inline assignment unpack(const ternary_row& r, const component_partition& comps) {
    const int n = static_cast<int>(comps.component_of.size() / 2);
    const row_layout& L = r.layout();
    assignment a(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int c = comps.component_of[2 * (i - 1)];
        int v;
        if (L.rigid_one(c)) {
            v = 1;
        } else if (L.rigid_zero(c)) {
            v = 0;
        } else {
            int p = L.position_of(c);
            if (p >= 0) {
                v = r.value_at(p);
            } else {
                p = L.position_of(L.omega_of(c));
                if (p < 0) throw std::logic_error("row layout does not cover the core");
                v = 1 - r.value_at(p);
            }
            if (v < 0 || v > 1) throw std::logic_error("cannot unpack an undetermined row");
        }
        a[i - 1] = static_cast<std::uint8_t>(v);
    }
    return a;
}

} // namespace all2sat
