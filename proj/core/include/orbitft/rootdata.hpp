#pragma once

#include <orbitft/perm.hpp>
#include <orbitft/rational.hpp>
#include <vector>

namespace orbitft {

// Cartan subgroup model for GL(n,R), indexed by l = 0..floor(n/2).
// Slots 0..n-1 carry the standard coordinates. Complex-conjugate pairs occupy
// slots (2j, 2j+1) for j = l..m-1 where m = floor(n/2); the remaining slots
// 0..2l-1 (and n-1 when n is odd) are real. l = m is the split Cartan, l = 0
// the fundamental one.
struct CartanModel {
    int n = 0;
    int l = 0;

    int m() const { return n / 2; }
    int delta() const { return n % 2; }
    int num_pairs() const { return m() - l; }
    int num_reals() const { return 2 * l + delta(); }

    std::vector<std::pair<int, int>> pairs() const;
    std::vector<int> real_slots() const;

    bool is_real_slot(int p) const;
    // index j - l in 0..num_pairs-1, or -1 for a real slot
    int pair_index_of(int p) const;
    // complex conjugation on slots: swaps pair members, fixes real slots
    int conjugate_slot(int p) const;

    friend bool operator==(const CartanModel& a, const CartanModel& b) {
        return a.n == b.n && a.l == b.l;
    }
};

CartanModel make_cartan(int n, int l);
// Cayley transform direction used throughout: one pair becomes two real slots.
CartanModel cayley_neighbor(const CartanModel& c);

// Root e_p - e_q, p != q.
struct Root {
    int p = 0;
    int q = 0;

    friend bool operator==(const Root& a, const Root& b) { return a.p == b.p && a.q == b.q; }
    friend bool operator<(const Root& a, const Root& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.q < b.q;
    }
};

inline Root negate_root(const Root& r) { return {r.q, r.p}; }

enum class RootType { Real, Imaginary, Complex };

RootType classify_root(const CartanModel& c, const Root& r);
Root conjugate_root(const CartanModel& c, const Root& r);

// all n(n-1) roots, sorted
std::vector<Root> all_roots(int n);

// Connected component of the regular set of the Cartan, at two granularities.
// real_order lists the real slots by strictly decreasing coordinate value.
// pair_signs[j-l] is the sign of the imaginary part at slot 2j (slot 2j+1
// carries the opposite sign); the coarse granularity fixes all signs to +1.
struct Component {
    CartanModel cartan;
    std::vector<int> real_order;
    std::vector<int> pair_signs;

    friend bool operator==(const Component& a, const Component& b) {
        return a.cartan == b.cartan && a.real_order == b.real_order && a.pair_signs == b.pair_signs;
    }
    friend bool operator<(const Component& a, const Component& b) {
        if (a.cartan.l != b.cartan.l) return a.cartan.l < b.cartan.l;
        if (a.real_order != b.real_order) return a.real_order < b.real_order;
        return a.pair_signs < b.pair_signs;
    }
};

enum class ComponentLevel { Orders, OrdersAndSigns };

Component canonical_component(const CartanModel& c);
std::vector<Component> enumerate_components(const CartanModel& c, ComponentLevel level);

// Regular rational point of the component: value at slot p is re[p] + i*im[p].
struct Witness {
    std::vector<Rational> re;
    std::vector<Rational> im;
};

// Positive system cut out by a witness of the component: alpha > 0 iff
// (Re alpha(Y0), Im alpha(Y0)) > (0,0) lexicographically. Scheme 0 and 1 pick
// different witnesses; any engine output must not depend on the scheme.
struct PositiveSystem {
    Component component;
    Witness witness;
    std::vector<Root> positives; // sorted, one of each {alpha,-alpha}
    int scheme = 0;
};

PositiveSystem canonical_positive_system(const Component& comp, int scheme = 0);

bool is_positive(const PositiveSystem& ps, const Root& r);
std::vector<Root> positive_real_roots(const PositiveSystem& ps);
std::vector<Root> positive_imaginary_roots(const PositiveSystem& ps);

// Real-slot permutation u with u * canonical = comp (u maps the canonical
// witness to the component's witness slot by slot). sign_u of the induced map
// on positive systems is always +1 by construction; callers may assert.
Perm transport_perm(const Component& comp);

// orientation flips between ps and the order convention e_p - e_q, p < q
int sign_versus_standard_order(const PositiveSystem& ps);

}
