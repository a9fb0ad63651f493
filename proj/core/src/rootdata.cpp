#include <orbitft/rootdata.hpp>

#include <algorithm>
#include <stdexcept>

namespace orbitft {

std::vector<std::pair<int, int>> CartanModel::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int j = l; j < m(); ++j) out.emplace_back(2 * j, 2 * j + 1);
    return out;
}

std::vector<int> CartanModel::real_slots() const {
    std::vector<int> out;
    for (int p = 0; p < 2 * l; ++p) out.push_back(p);
    if (delta() == 1) out.push_back(n - 1);
    return out;
}

bool CartanModel::is_real_slot(int p) const {
    if (p < 0 || p >= n) throw std::out_of_range("slot out of range");
    if (p < 2 * l) return true;
    return delta() == 1 && p == n - 1;
}

int CartanModel::pair_index_of(int p) const {
    if (is_real_slot(p)) return -1;
    return p / 2 - l;
}

int CartanModel::conjugate_slot(int p) const {
    if (is_real_slot(p)) return p;
    return p % 2 == 0 ? p + 1 : p - 1;
}

CartanModel make_cartan(int n, int l) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (l < 0 || l > n / 2) throw std::invalid_argument("cartan index out of range");
    return CartanModel{n, l};
}

CartanModel cayley_neighbor(const CartanModel& c) {
    if (c.l >= c.m()) throw std::invalid_argument("split cartan has no cayley neighbor");
    return CartanModel{c.n, c.l + 1};
}

RootType classify_root(const CartanModel& c, const Root& r) {
    bool pr = c.is_real_slot(r.p);
    bool qr = c.is_real_slot(r.q);
    if (pr && qr) return RootType::Real;
    if (!pr && !qr && c.conjugate_slot(r.p) == r.q) return RootType::Imaginary;
    return RootType::Complex;
}

Root conjugate_root(const CartanModel& c, const Root& r) {
    return {c.conjugate_slot(r.p), c.conjugate_slot(r.q)};
}

std::vector<Root> all_roots(int n) {
    std::vector<Root> out;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (p != q) out.push_back({p, q});
    std::sort(out.begin(), out.end());
    return out;
}

Component canonical_component(const CartanModel& c) {
    Component comp;
    comp.cartan = c;
    comp.real_order = c.real_slots();
    comp.pair_signs.assign(c.num_pairs(), 1);
    return comp;
}

static void validate_component(const Component& comp) {
    const CartanModel& c = comp.cartan;
    std::vector<int> sorted = comp.real_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.real_slots()) throw std::invalid_argument("real_order is not an order of the real slots");
    if (static_cast<int>(comp.pair_signs.size()) != c.num_pairs())
        throw std::invalid_argument("pair_signs size mismatch");
    for (int s : comp.pair_signs)
        if (s != 1 && s != -1) throw std::invalid_argument("pair sign must be +1 or -1");
}

std::vector<Component> enumerate_components(const CartanModel& c, ComponentLevel level) {
    std::vector<int> order = c.real_slots();
    int np = c.num_pairs();
    long sign_patterns = (level == ComponentLevel::OrdersAndSigns) ? (1L << np) : 1L;
    std::vector<Component> out;
    do {
        for (long mask = 0; mask < sign_patterns; ++mask) {
            Component comp;
            comp.cartan = c;
            comp.real_order = order;
            comp.pair_signs.resize(np);
            for (int j = 0; j < np; ++j) comp.pair_signs[j] = ((mask >> j) & 1) ? -1 : 1;
            out.push_back(std::move(comp));
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

// (Re, Im) lexicographically positive
static bool lex_positive(const Rational& re, const Rational& im) {
    if (re != 0) return re > 0;
    return im > 0;
}

static Witness build_witness(const Component& comp, int scheme, int attempt) {
    const CartanModel& c = comp.cartan;
    Witness w;
    w.re.assign(c.n, Rational(0));
    w.im.assign(c.n, Rational(0));
    int nr = c.num_reals();
    Rational real_scale = (scheme == 0) ? Rational(1) : Rational(3);
    for (int r = 0; r < nr; ++r) w.re[comp.real_order[r]] = real_scale * (nr - r);
    Rational frac = (scheme == 0) ? Rational(1, 2) : Rational(1, 3);
    for (int j = 0; j < c.num_pairs(); ++j) {
        Rational a = Rational(-(j + 1)) - frac;
        if (attempt > 0) a += Rational(j + 1) * Rational(1, 1L << (attempt + 2));
        int slot = 2 * (c.l + j);
        w.re[slot] = a;
        w.re[slot + 1] = a;
        w.im[slot] = comp.pair_signs[j];
        w.im[slot + 1] = -comp.pair_signs[j];
    }
    return w;
}

static bool witness_is_admissible(const CartanModel& c, const Witness& w) {
    for (int p = 0; p < c.n; ++p) {
        for (int q = p + 1; q < c.n; ++q) {
            Rational dre = w.re[p] - w.re[q];
            Rational dim = w.im[p] - w.im[q];
            if (dre == 0 && dim == 0) return false; // not regular
            if (classify_root(c, {p, q}) == RootType::Complex && dre == 0) return false;
        }
    }
    return true;
}

static void validate_positive_system(const PositiveSystem& ps) {
    const CartanModel& c = ps.component.cartan;
    // additive closure: alpha=(p,q), beta=(q,r) positive implies (p,r) positive
    for (const Root& a : ps.positives) {
        for (const Root& b : ps.positives) {
            if (a.q == b.p && a.p != b.q) {
                if (!is_positive(ps, {a.p, b.q})) throw std::logic_error("positive system not additively closed");
            }
        }
        // conjugation stability off the real locus
        RootType t = classify_root(c, a);
        if (t == RootType::Complex) {
            if (!is_positive(ps, conjugate_root(c, a)))
                throw std::logic_error("complex positive root with non-positive conjugate");
        }
    }
    // real positives must follow the component's slot order
    int nr = c.num_reals();
    for (int r = 0; r < nr; ++r)
        for (int s = r + 1; s < nr; ++s)
            if (!is_positive(ps, {ps.component.real_order[r], ps.component.real_order[s]}))
                throw std::logic_error("real positive roots disagree with the component order");
    // imaginary positives must point along the pair signs
    for (int j = 0; j < c.num_pairs(); ++j) {
        int slot = 2 * (c.l + j);
        Root expect = ps.component.pair_signs[j] == 1 ? Root{slot, slot + 1} : Root{slot + 1, slot};
        if (!is_positive(ps, expect)) throw std::logic_error("imaginary positive roots disagree with the pair signs");
    }
}

PositiveSystem canonical_positive_system(const Component& comp, int scheme) {
    if (scheme != 0 && scheme != 1) throw std::invalid_argument("witness scheme must be 0 or 1");
    validate_component(comp);
    const CartanModel& c = comp.cartan;
    PositiveSystem ps;
    ps.component = comp;
    ps.scheme = scheme;
    bool ok = false;
    for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
        ps.witness = build_witness(comp, scheme, attempt);
        ok = witness_is_admissible(c, ps.witness);
    }
    if (!ok) throw std::logic_error("no admissible witness found");
    for (int p = 0; p < c.n; ++p) {
        for (int q = p + 1; q < c.n; ++q) {
            Rational dre = ps.witness.re[p] - ps.witness.re[q];
            Rational dim = ps.witness.im[p] - ps.witness.im[q];
            if (lex_positive(dre, dim))
                ps.positives.push_back({p, q});
            else
                ps.positives.push_back({q, p});
        }
    }
    std::sort(ps.positives.begin(), ps.positives.end());
    validate_positive_system(ps);
    return ps;
}

bool is_positive(const PositiveSystem& ps, const Root& r) {
    return std::binary_search(ps.positives.begin(), ps.positives.end(), r);
}

std::vector<Root> positive_real_roots(const PositiveSystem& ps) {
    std::vector<Root> out;
    for (const Root& r : ps.positives)
        if (classify_root(ps.component.cartan, r) == RootType::Real) out.push_back(r);
    return out;
}

std::vector<Root> positive_imaginary_roots(const PositiveSystem& ps) {
    std::vector<Root> out;
    for (const Root& r : ps.positives)
        if (classify_root(ps.component.cartan, r) == RootType::Imaginary) out.push_back(r);
    return out;
}

Perm transport_perm(const Component& comp) {
    validate_component(comp);
    const CartanModel& c = comp.cartan;
    Perm u = Perm::identity(c.n);
    std::vector<int> sorted = c.real_slots();
    for (size_t r = 0; r < sorted.size(); ++r) u.img[sorted[r]] = comp.real_order[r];
    for (int j = 0; j < c.num_pairs(); ++j) {
        if (comp.pair_signs[j] == -1) {
            int slot = 2 * (c.l + j);
            u.img[slot] = slot + 1;
            u.img[slot + 1] = slot;
        }
    }
    return u;
}

int sign_versus_standard_order(const PositiveSystem& ps) {
    int flips = 0;
    for (const Root& r : ps.positives)
        if (r.p > r.q) ++flips;
    return flips % 2 == 0 ? 1 : -1;
}

}
