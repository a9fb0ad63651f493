#include <orbitft/formulas.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace orbitft {

std::vector<Root> levi_positive_roots(const PositiveSystem& ps, const LeviEmbedding& e) {
    std::vector<Root> out;
    for (const Root& r : ps.positives) {
        for (const auto& b : e.blocks) {
            bool pin = std::binary_search(b.begin(), b.end(), r.p);
            bool qin = std::binary_search(b.begin(), b.end(), r.q);
            if (pin && qin) {
                out.push_back(r);
                break;
            }
            if (pin || qin) break;
        }
    }
    return out;
}

static ComponentFormula direct_at(const LeviClass& cls, const Component& comp, int scheme) {
    const CartanModel& c = comp.cartan;
    if (cls.n() != c.n) throw std::invalid_argument("levi class size mismatch");
    ComponentFormula f;
    f.levi = cls;
    f.engine = "direct";
    f.psys = canonical_positive_system(comp, scheme);
    f.numerator = poly_zero(c.n);
    std::vector<LeviEmbedding> embeddings = enumerate_levis_containing(c, cls);
    if (embeddings.empty() != !supports(c, cls))
        throw std::logic_error("support rule disagrees with the embedding enumeration");
    if (embeddings.empty()) return f;
    std::uint64_t co = coefficient(c, embeddings[0]);
    for (const auto& e : embeddings)
        if (coefficient(c, e) != co)
            throw std::logic_error("stabilizer index varies across embeddings of one class");
    GaussianRational gco{Rational(static_cast<unsigned long>(co)), Rational(0)};
    for (const auto& e : embeddings) {
        std::vector<Root> roots = levi_positive_roots(f.psys, e);
        f.numerator = f.numerator + scalar_mul(gco, product_of_roots(c.n, roots));
        f.factored.push_back({gco.re, std::move(roots)});
    }
    return f;
}

static ComponentFormula oracle_at(const LeviClass& cls, const Component& comp, int scheme) {
    const CartanModel& c = comp.cartan;
    int n = c.n;
    if (cls.n() != n) throw std::invalid_argument("levi class size mismatch");
    ComponentFormula f;
    f.levi = cls;
    f.engine = "oracle";
    f.psys = canonical_positive_system(comp, scheme);
    f.numerator = poly_zero(n);
    int kappa = fundamental_cartan_index(cls);
    if (c.l < kappa) return f;
    CartanModel hk = make_cartan(n, kappa);
    PositiveSystem psk = canonical_positive_system(canonical_component(hk), scheme);
    LeviEmbedding L = standard_embedding(hk, cls);
    std::vector<Root> rootsL = levi_positive_roots(psk, L);
    Polynomial piL = product_of_roots(n, rootsL);
    int rL = static_cast<int>(rootsL.size());
    f.i_power = rL % 4;
    Rational prefactor = Rational(1UL << (c.l - kappa)) /
                         Rational(static_cast<unsigned long>(real_weyl_of_levi_order(hk, L.blocks)));
    WklSet wkl = compute_wkl(hk, c);
    Perm u = transport_perm(comp);

    // derivative-limit pipeline on the transported exponential sum
    Polynomial one = poly_constant(n, GaussianRational(1));
    std::vector<ExpTerm> terms;
    for (const WklElement& el : wkl.members)
        terms.push_back({GaussianRational(el.eps), one, compose(u, el.w)});
    ExpSum s = exp_sum(n, std::move(terms));
    Polynomial p = limit_t0(apply_diffop_exp(DiffOp{piL}, s));
    p = scalar_mul(i_power(-rL) * GaussianRational(prefactor), p);
    for (const auto& [e, coeff] : p.terms)
        if (coeff.im != 0) throw std::logic_error("derivative-limit numerator has a nonzero imaginary part");

    // regroup the same sum by the image of L under each group element
    std::map<LeviEmbedding, Rational> collected;
    std::map<LeviEmbedding, Polynomial> pi_of;
    for (const WklElement& el : wkl.members) {
        Perm v = compose(u, el.w);
        std::vector<std::vector<int>> img;
        for (const auto& b : L.blocks) {
            std::vector<int> nb;
            for (int slot : b) nb.push_back(v(slot));
            img.push_back(std::move(nb));
        }
        LeviEmbedding e = normalize_embedding(c, std::move(img));
        auto it = pi_of.find(e);
        if (it == pi_of.end())
            it = pi_of.emplace(e, product_of_roots(n, levi_positive_roots(f.psys, e))).first;
        Polynomial moved = relabel(piL, v);
        int sgn;
        if (moved == it->second) sgn = 1;
        else if (moved == -it->second) sgn = -1;
        else throw std::logic_error("moved levi product is not plus or minus the image levi product");
        collected[e] += prefactor * (el.eps * sgn);
    }
    Polynomial regrouped = poly_zero(n);
    for (const auto& [e, co] : collected) {
        if (co == 0) continue;
        f.factored.push_back({co, levi_positive_roots(f.psys, e)});
        regrouped = regrouped + scalar_mul(GaussianRational(co), pi_of.at(e));
    }
    if (!(regrouped == p))
        throw std::logic_error("factored regrouping disagrees with the derivative-limit numerator");
    f.numerator = std::move(p);
    return f;
}

// the transport permutation carries the canonical component's positive system
// onto the target component's slot by slot, so the formula at any component is
// the pure relabeling of the canonical one
static ComponentFormula transport_to(const ComponentFormula& f0, const Component& comp, int scheme) {
    ComponentFormula f;
    f.levi = f0.levi;
    f.engine = f0.engine;
    f.i_power = f0.i_power;
    f.psys = canonical_positive_system(comp, scheme);
    Perm u = transport_perm(comp);
    f.numerator = relabel(f0.numerator, u);
    for (const FactoredTerm& t : f0.factored) {
        FactoredTerm nt;
        nt.coeff = t.coeff;
        for (const Root& r : t.roots) {
            Root moved{u(r.p), u(r.q)};
            if (!is_positive(f.psys, moved))
                throw std::logic_error("transported root left the positive system");
            nt.roots.push_back(moved);
        }
        std::sort(nt.roots.begin(), nt.roots.end());
        f.factored.push_back(std::move(nt));
    }
    return f;
}

namespace {

using CanonicalKey = std::tuple<int, int, int, std::vector<int>>;

struct CanonicalMemo {
    std::mutex mu;
    std::map<CanonicalKey, ComponentFormula> entries;
};

ComponentFormula memoized_canonical(CanonicalMemo& memo, const LeviClass& cls, const CartanModel& c,
                                    int scheme,
                                    ComponentFormula (*compute)(const LeviClass&, const Component&, int)) {
    CanonicalKey key{c.n, c.l, scheme, cls.q};
    {
        std::lock_guard<std::mutex> g(memo.mu);
        auto it = memo.entries.find(key);
        if (it != memo.entries.end()) return it->second;
    }
    ComponentFormula f = compute(cls, canonical_component(c), scheme);
    std::lock_guard<std::mutex> g(memo.mu);
    return memo.entries.emplace(std::move(key), std::move(f)).first->second;
}

}

ComponentFormula nilpotent_ft_direct(const LeviClass& cls, const Component& comp, int scheme) {
    static CanonicalMemo memo;
    const CartanModel& c = comp.cartan;
    if (cls.n() != c.n) throw std::invalid_argument("levi class size mismatch");
    ComponentFormula f0 = memoized_canonical(memo, cls, c, scheme, &direct_at);
    if (comp == canonical_component(c)) return f0;
    return transport_to(f0, comp, scheme);
}

ComponentFormula nilpotent_ft_oracle(const LeviClass& cls, const Component& comp, int scheme) {
    static CanonicalMemo memo;
    const CartanModel& c = comp.cartan;
    if (cls.n() != c.n) throw std::invalid_argument("levi class size mismatch");
    ComponentFormula f0 = memoized_canonical(memo, cls, c, scheme, &oracle_at);
    if (comp == canonical_component(c)) return f0;
    return transport_to(f0, comp, scheme);
}

SemisimpleFormula semisimple_ft(int k, const Component& comp, int scheme) {
    const CartanModel& c = comp.cartan;
    if (k < 0 || k > c.m()) throw std::invalid_argument("chamber cartan index out of range");
    SemisimpleFormula f;
    f.k = k;
    f.psys = canonical_positive_system(comp, scheme);
    f.numerator = exp_sum(c.n, {});
    if (c.l < k) return f; // the transform vanishes on more compact cartans
    WklSet wkl = compute_wkl(make_cartan(c.n, k), c);
    Perm u = transport_perm(comp);
    GaussianRational pre{Rational(1UL << (c.l - k)), Rational(0)};
    Polynomial one = poly_constant(c.n, GaussianRational(1));
    std::vector<ExpTerm> terms;
    for (const WklElement& el : wkl.members)
        terms.push_back({pre * GaussianRational(el.eps), one, compose(u, el.w)});
    f.numerator = exp_sum(c.n, std::move(terms));
    return f;
}

SemisimpleFormula rossmann_ft(const Component& comp, int scheme) {
    const CartanModel& c = comp.cartan;
    SemisimpleFormula f;
    f.k = c.l;
    f.psys = canonical_positive_system(comp, scheme);
    int q = c.m() - c.l;
    GaussianRational sign{Rational(q % 2 == 0 ? 1 : -1), Rational(0)};
    Polynomial one = poly_constant(c.n, GaussianRational(1));
    std::vector<ExpTerm> terms;
    for (const Perm& w : real_weyl(c))
        terms.push_back({sign * GaussianRational(epsilon_imaginary(f.psys, w)), one, w});
    f.numerator = exp_sum(c.n, std::move(terms));
    return f;
}

static std::string perm_text(const Perm& w) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < w.size(); ++i) os << (i ? "," : "") << w(i) + 1;
    os << "]";
    return os.str();
}

MatchingReport check_matching(int k, const Component& c1, const Component& c2, int scheme) {
    const CartanModel& h1 = c1.cartan;
    const CartanModel& h2 = c2.cartan;
    if (h1.n != h2.n || h2.l != h1.l + 1)
        throw std::invalid_argument("components are not one cayley step apart");
    for (int s : c1.pair_signs)
        if (s != 1) throw std::invalid_argument("matching takes order-level components");
    for (int s : c2.pair_signs)
        if (s != 1) throw std::invalid_argument("matching takes order-level components");
    int n = h1.n;
    int a = 2 * h1.l, b = a + 1; // the pair opened by the cayley step
    std::vector<int> restricted;
    int pos_a = -1, pos_b = -1;
    for (int i = 0; i < static_cast<int>(c2.real_order.size()); ++i) {
        int slot = c2.real_order[i];
        if (slot == a) pos_a = i;
        else if (slot == b) pos_b = i;
        else restricted.push_back(slot);
    }
    if (restricted != c1.real_order || pos_a < 0 || pos_b < 0 || std::abs(pos_a - pos_b) != 1)
        throw std::invalid_argument("components are not adjacent across the cayley wall");

    SemisimpleFormula f1 = semisimple_ft(k, c1, scheme);
    SemisimpleFormula f2 = semisimple_ft(k, c2, scheme);
    // re-express both numerators over the standard-order denominator so the
    // coefficients are comparable
    Rational s1(sign_versus_standard_order(f1.psys));
    Rational s2(sign_versus_standard_order(f2.psys));
    std::map<Perm, Rational> av, bv;
    for (const ExpTerm& t : f1.numerator.terms) {
        if (t.coeff.im != 0) throw std::logic_error("semisimple coefficient has an imaginary part");
        av[t.w] = t.coeff.re * s1;
    }
    for (const ExpTerm& t : f2.numerator.terms) {
        if (t.coeff.im != 0) throw std::logic_error("semisimple coefficient has an imaginary part");
        bv[t.w] = t.coeff.re * s2;
    }
    auto get = [](const std::map<Perm, Rational>& m, const Perm& w) {
        auto it = m.find(w);
        return it == m.end() ? Rational(0) : it->second;
    };
    Perm salpha = transposition(n, a, b);
    MatchingReport rep;
    for (const Perm& v : all_permutations(n)) {
        Perm sv = compose(salpha, v);
        if (sv < v) continue; // each two-term relation once
        Rational ev(parity_sign(v));
        Rational lhs = ev * get(av, v) - ev * get(av, sv);
        Rational rhs = ev * get(bv, v) - ev * get(bv, sv);
        ++rep.relations;
        if (lhs != rhs) {
            rep.ok = false;
            rep.failures.push_back("relation at v=" + perm_text(v) + " lhs=" + rational_to_string(lhs) +
                                   " rhs=" + rational_to_string(rhs));
        }
    }
    return rep;
}

Rational c_lambda(const std::vector<Rational>& lambda, const std::vector<Rational>& xi,
                  const LeviClass& cls) {
    int n = static_cast<int>(xi.size());
    if (static_cast<int>(lambda.size()) != n || cls.n() != n)
        throw std::invalid_argument("c_lambda size mismatch");
    // the coincidence pattern of xi must realize the class
    std::map<Rational, int> mult;
    for (const Rational& x : xi) mult[x] += 1;
    std::vector<int> pattern;
    for (const auto& [x, m] : mult) pattern.push_back(m);
    std::sort(pattern.begin(), pattern.end(), std::greater<int>());
    if (pattern != cls.q) throw std::invalid_argument("base point centralizer does not match the class");
    Rational num(1), den(1);
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            Rational dx = xi[p] - xi[q];
            if (dx == 0) continue;
            num *= lambda[p] - lambda[q];
            den *= dx;
        }
    }
    return num / den;
}

IntegralityReport check_integrality_and_positivity(const ComponentFormula& f) {
    IntegralityReport rep;
    for (const auto& [e, c] : f.numerator.terms) {
        if (c.im != 0) rep.imaginary_zero = false;
        if (!is_integer(c.re)) rep.expanded_integral = false;
    }
    for (const FactoredTerm& t : f.factored)
        if (!is_integer(t.coeff) || t.coeff <= 0) rep.factored_positive_integral = false;
    return rep;
}

std::vector<int> support_set(int n, const LeviClass& cls) {
    std::vector<int> out;
    for (int l = 0; l <= n / 2; ++l)
        if (supports(make_cartan(n, l), cls)) out.push_back(l);
    return out;
}

}
