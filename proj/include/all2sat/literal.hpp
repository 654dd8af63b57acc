#pragma once

#include <cassert>
#include <cstdint>
#include <compare>
#include <string>

namespace all2sat {

// Literal over variables 1..n, stored as the vertex index of the implication
// digraph: x_i -> 2(i-1), ~x_i -> 2(i-1)+1. Negation is an XOR of the low bit.
class literal {
public:
    literal() = default;

    static literal positive(int var) {
        assert(var >= 1);
        return literal(2 * (var - 1));
    }
    static literal negative(int var) {
        assert(var >= 1);
        return literal(2 * (var - 1) + 1);
    }
    static literal from_dimacs(int code) {
        assert(code != 0);
        return code > 0 ? positive(code) : negative(-code);
    }
    static literal from_index(int idx) {
        assert(idx >= 0);
        return literal(idx);
    }

    int var() const { assert(valid()); return idx_ / 2 + 1; }
    bool negated() const { assert(valid()); return idx_ & 1; }
    literal operator~() const { assert(valid()); return literal(idx_ ^ 1); }

    int index() const { assert(valid()); return idx_; }
    int to_dimacs() const { return negated() ? -var() : var(); }
    std::string str() const { return std::to_string(to_dimacs()); }

    bool valid() const { return idx_ >= 0; }

    friend bool operator==(literal, literal) = default;
    friend std::strong_ordering operator<=>(literal, literal) = default;

private:
    explicit literal(std::int32_t i) : idx_(i) {}
    std::int32_t idx_ = -1;
};

// Two-literal clause, kept as an unordered pair: the smaller vertex index
// first, so syntactically reordered clauses compare equal.
class clause2 {
public:
    clause2(literal a, literal b) : a_(a), b_(b) {
        assert(a.valid() && b.valid());
        if (b_ < a_) std::swap(a_, b_);
    }

    literal first() const { return a_; }
    literal second() const { return b_; }

    bool contains(literal l) const { return a_ == l || b_ == l; }
    bool tautological() const { return a_ == ~b_; }
    bool degenerate() const { return a_ == b_; }

    friend bool operator==(const clause2&, const clause2&) = default;
    friend std::strong_ordering operator<=>(const clause2&, const clause2&) = default;

private:
    literal a_, b_;
};

} // namespace all2sat
