#pragma once

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "all2sat/bitvec.hpp"
#include "all2sat/implication_graph.hpp"

namespace all2sat {

// Strong components of the implication digraph, ordered by reachability:
// c <= d iff d is reachable from c. Negation induces the order-reversing
// involution omega, which has no fixed points exactly when the formula is
// satisfiable. Because component ids are assigned sinks-first, every up-set
// lives at ids <= its element; several routines below lean on that.
class involution_poset {
public:
    int size() const { return w_; }

    bool leq(int c, int d) const {
        check(c);
        check(d);
        return up_[c].test(static_cast<std::size_t>(d));
    }

    int omega(int c) const {
        check(c);
        return omega_[c];
    }

    const bitvec& up_set(int c) const {
        check(c);
        return up_[c];
    }
    const bitvec& down_set(int c) const {
        check(c);
        return down_[c];
    }

    // {omega(c) : c in s}
    bitvec omega_image(const bitvec& s) const {
        bitvec r(static_cast<std::size_t>(w_));
        for (std::size_t i = s.find_first(); i != bitvec::npos; i = s.find_next(i))
            r.set(static_cast<std::size_t>(omega_[i]));
        return r;
    }

    // Elements with no one strictly above them.
    bitvec maximal_elements() const {
        bitvec r(static_cast<std::size_t>(w_));
        for (int c = 0; c < w_; ++c)
            if (up_[c].count() == 1) r.set(static_cast<std::size_t>(c));
        return r;
    }

    friend involution_poset build_poset(const component_partition& p);

private:
    void check(int c) const {
        if (c < 0 || c >= w_)
            throw std::out_of_range("poset element " + std::to_string(c) + " out of range");
    }

    int w_ = 0;
    std::vector<bitvec> up_, down_;
    std::vector<int> omega_;
};

inline involution_poset build_poset(const component_partition& p) {
    sat_status st = check_condition4(p);
    if (!st.satisfiable)
        throw std::invalid_argument("formula is unsatisfiable: variable " +
                                    std::to_string(*st.conflict_var) +
                                    " shares a component with its negation");
    involution_poset ip;
    ip.w_ = p.count;
    const std::size_t w = static_cast<std::size_t>(p.count);
    ip.omega_.resize(w);
    for (std::size_t c = 0; c < w; ++c)
        ip.omega_[c] = p.component_of[static_cast<std::size_t>(p.members[c][0]) ^ 1];
    ip.up_.assign(w, bitvec(w));
    for (std::size_t c = 0; c < w; ++c) {
        ip.up_[c].set(c);
        for (int d : p.successors[c]) ip.up_[c] |= ip.up_[static_cast<std::size_t>(d)];
    }
    ip.down_.assign(w, bitvec(w));
    for (std::size_t c = 0; c < w; ++c)
        for (std::size_t d = ip.up_[c].find_first(); d != bitvec::npos; d = ip.up_[c].find_next(d))
            ip.down_[d].set(c);
    for (std::size_t c = 0; c < w; ++c) {
        assert(ip.omega_[static_cast<std::size_t>(ip.omega_[c])] == static_cast<int>(c));
        assert(ip.omega_[c] != static_cast<int>(c));
    }
    return ip;
}

// W splits into the rigid filter (forced true in every model), the rigid
// ideal (its mirror image, forced false) and the core, whose size is even.
struct rigid_split {
    bitvec filter, ideal, core;

    std::size_t core_size() const { return core.count(); }
};

inline rigid_split compute_rigid_split(const involution_poset& ip) {
    const std::size_t w = static_cast<std::size_t>(ip.size());
    rigid_split s{bitvec(w), bitvec(w), bitvec(w)};
    for (int c = 0; c < ip.size(); ++c) {
        int m = ip.omega(c);
        if (c != m && ip.leq(c, m))
            s.ideal.set(static_cast<std::size_t>(c)); // c below ~c: forced false
        else if (c != m && ip.leq(m, c))
            s.filter.set(static_cast<std::size_t>(c)); // ~c below c: forced true
        else
            s.core.set(static_cast<std::size_t>(c));
    }
    return s;
}

// No core element sits above (or below) both some d and omega(d). This is
// what makes the row closures clash-free; exposed for the property tests.
inline bool core_configuration_ok(const involution_poset& ip, const rigid_split& s) {
    for (std::size_t c = s.core.find_first(); c != bitvec::npos; c = s.core.find_next(c)) {
        const bitvec& dn = ip.down_set(static_cast<int>(c));
        if (dn.intersects(ip.omega_image(dn))) return false;
        const bitvec& up = ip.up_set(static_cast<int>(c));
        if (up.intersects(ip.omega_image(up))) return false;
    }
    return true;
}

// One valid bisection (X, omega(X)) with X an up-closed transversal
// containing the rigid filter. Scanning core ids in ascending order works
// because the lowest unassigned id is always maximal among the unassigned:
// up-sets only reach smaller ids.
inline bitvec shell_one_bisection(const involution_poset& ip, const rigid_split& s) {
    bitvec x = s.filter;
    bitvec y = s.ideal;
    for (std::size_t c = s.core.find_first(); c != bitvec::npos; c = s.core.find_next(c)) {
        if (x.test(c) || y.test(c)) continue;
        x.set(c);
        y.set(static_cast<std::size_t>(ip.omega(static_cast<int>(c))));
    }
    return x;
}

inline bool is_valid_bisection(const involution_poset& ip, const rigid_split& s, const bitvec& x) {
    if (static_cast<int>(x.size()) != ip.size()) return false;
    bitvec y = ip.omega_image(x);
    if (x.intersects(y)) return false;
    if (x.count() + y.count() != static_cast<std::size_t>(ip.size())) return false;
    if (!s.filter.is_subset_of(x)) return false;
    for (std::size_t c = x.find_first(); c != bitvec::npos; c = x.find_next(c))
        if (!ip.up_set(static_cast<int>(c)).is_subset_of(x)) return false;
    return true;
}

// Reads an assignment off the filter half of a bisection.
inline assignment model_from_filter(const component_partition& p, const bitvec& x) {
    const int n = static_cast<int>(p.component_of.size() / 2);
    assignment a(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        a[i - 1] = x.test(static_cast<std::size_t>(p.component_of[2 * (i - 1)])) ? 1 : 0;
    return a;
}

// Debug export: the cover relation, one "c d" line per immediate c < d.
inline std::string hasse_as_text(const involution_poset& ip) {
    std::ostringstream os;
    for (int c = 0; c < ip.size(); ++c) {
        bitvec above = ip.up_set(c);
        above.reset(static_cast<std::size_t>(c));
        for (std::size_t d = above.find_first(); d != bitvec::npos; d = above.find_next(d)) {
            bool immediate = true;
            for (std::size_t e = above.find_first(); immediate && e != bitvec::npos;
                 e = above.find_next(e))
                if (e != d && ip.up_set(static_cast<int>(e)).test(d)) immediate = false;
            if (immediate) os << c << ' ' << d << '\n';
        }
    }
    return os.str();
}

// Debug export: omega as a permutation, one "c omega(c)" pair per line.
inline std::string omega_as_text(const involution_poset& ip) {
    std::ostringstream os;
    for (int c = 0; c < ip.size(); ++c) os << c << ' ' << ip.omega(c) << '\n';
    return os.str();
}

} // namespace all2sat
