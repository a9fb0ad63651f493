#include <orbitft/symalg.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orbitft {

int Polynomial::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

bool Polynomial::is_homogeneous() const {
    int deg = -1;
    for (const auto& [e, c] : terms) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (deg == -1) deg = d;
        else if (d != deg) return false;
    }
    return true;
}

Polynomial poly_zero(int nvars) {
    Polynomial p;
    p.nvars = nvars;
    return p;
}

Polynomial poly_constant(int nvars, const GaussianRational& c) {
    Polynomial p = poly_zero(nvars);
    if (!c.is_zero()) p.terms.emplace(Exponents(nvars, 0), c);
    return p;
}

Polynomial poly_variable(int nvars, int var) {
    if (var < 0 || var >= nvars) throw std::out_of_range("variable index out of range");
    Polynomial p = poly_zero(nvars);
    Exponents e(nvars, 0);
    e[var] = 1;
    p.terms.emplace(std::move(e), GaussianRational(1));
    return p;
}

Polynomial poly_root(int nvars, const Root& r) {
    return poly_variable(nvars, r.p) - poly_variable(nvars, r.q);
}

static void add_term(Polynomial& p, const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = p.terms.find(e);
    if (it == p.terms.end()) {
        p.terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) p.terms.erase(it);
    }
}

static void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial out = a;
    for (const auto& [e, c] : b.terms) add_term(out, e, c);
    return out;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial out = a;
    for (auto& [e, c] : out.terms) c = -c;
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial out = poly_zero(a.nvars);
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            Exponents e(a.nvars);
            for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            add_term(out, e, ca * cb);
        }
    }
    return out;
}

Polynomial scalar_mul(const GaussianRational& c, const Polynomial& a) {
    Polynomial out = poly_zero(a.nvars);
    if (c.is_zero()) return out;
    for (const auto& [e, coeff] : a.terms) out.terms.emplace(e, c * coeff);
    return out;
}

Polynomial relabel(const Polynomial& a, const Perm& w) {
    if (w.size() != a.nvars) throw std::invalid_argument("relabel permutation size mismatch");
    Polynomial out = poly_zero(a.nvars);
    for (const auto& [e, c] : a.terms) {
        Exponents ne(a.nvars, 0);
        for (int i = 0; i < a.nvars; ++i) ne[w.img[i]] += e[i];
        add_term(out, ne, c);
    }
    return out;
}

Polynomial differentiate(const Polynomial& a, int var) {
    if (var < 0 || var >= a.nvars) throw std::out_of_range("variable index out of range");
    Polynomial out = poly_zero(a.nvars);
    for (const auto& [e, c] : a.terms) {
        if (e[var] == 0) continue;
        Exponents ne = e;
        ne[var] -= 1;
        add_term(out, ne, GaussianRational(e[var]) * c);
    }
    return out;
}

GaussianRational evaluate(const Polynomial& a, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != a.nvars) throw std::invalid_argument("evaluation point size mismatch");
    GaussianRational acc(0);
    for (const auto& [e, c] : a.terms) {
        Rational mono(1);
        for (int i = 0; i < a.nvars; ++i)
            for (int k = 0; k < e[i]; ++k) mono *= point[i];
        acc += c * GaussianRational(mono);
    }
    return acc;
}

Polynomial product_of_roots(int nvars, const std::vector<Root>& roots) {
    Polynomial out = poly_constant(nvars, GaussianRational(1));
    for (const Root& r : roots) out = out * poly_root(nvars, r);
    return out;
}

Polynomial apply_diffop_poly(const DiffOp& d, const Polynomial& f) {
    check_same_ring(d.symbol, f);
    Polynomial out = poly_zero(f.nvars);
    for (const auto& [e, c] : d.symbol.terms) {
        Polynomial g = f;
        for (int i = 0; i < f.nvars && !g.is_zero(); ++i)
            for (int k = 0; k < e[i] && !g.is_zero(); ++k) g = differentiate(g, i);
        out = out + scalar_mul(c, g);
    }
    return out;
}

static bool exp_term_key_less(const ExpTerm& a, const ExpTerm& b) {
    if (a.w.img != b.w.img) return a.w.img < b.w.img;
    return a.poly < b.poly;
}

static ExpSum normalize(ExpSum s) {
    std::stable_sort(s.terms.begin(), s.terms.end(), exp_term_key_less);
    std::vector<ExpTerm> merged;
    for (ExpTerm& t : s.terms) {
        if (t.poly.nvars != s.nvars || t.w.size() != s.nvars)
            throw std::invalid_argument("exp term arity mismatch");
        if (!merged.empty() && merged.back().w == t.w && merged.back().poly == t.poly) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const ExpTerm& t) { return t.coeff.is_zero() || t.poly.is_zero(); });
    s.terms = std::move(merged);
    return s;
}

bool operator==(const ExpSum& a, const ExpSum& b) {
    if (a.nvars != b.nvars || a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        const ExpTerm& x = a.terms[i];
        const ExpTerm& y = b.terms[i];
        if (!(x.coeff == y.coeff) || !(x.poly == y.poly) || !(x.w == y.w)) return false;
    }
    return true;
}

ExpSum exp_sum(int nvars, std::vector<ExpTerm> terms) {
    ExpSum s;
    s.nvars = nvars;
    s.terms = std::move(terms);
    return normalize(std::move(s));
}

ExpSum operator+(const ExpSum& a, const ExpSum& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("exp sum arity mismatch");
    ExpSum s;
    s.nvars = a.nvars;
    s.terms = a.terms;
    s.terms.insert(s.terms.end(), b.terms.begin(), b.terms.end());
    return normalize(std::move(s));
}

ExpSum scalar_mul(const GaussianRational& c, const ExpSum& s) {
    ExpSum out = s;
    for (ExpTerm& t : out.terms) t.coeff = c * t.coeff;
    return normalize(std::move(out));
}

ExpSum apply_diffop_exp(const DiffOp& d, const ExpSum& s) {
    if (d.symbol.nvars != s.nvars) throw std::invalid_argument("exp sum arity mismatch");
    if (!d.symbol.is_homogeneous())
        throw std::invalid_argument("apply_diffop_exp requires a homogeneous symbol");
    int deg = d.symbol.total_degree();
    GaussianRational phase = i_power(deg);
    Polynomial one = poly_constant(s.nvars, GaussianRational(1));
    ExpSum out;
    out.nvars = s.nvars;
    for (const ExpTerm& t : s.terms) {
        if (!(t.poly == one))
            throw std::invalid_argument("apply_diffop_exp supports pure exponential terms only");
        ExpTerm nt;
        nt.coeff = t.coeff * phase;
        nt.poly = relabel(d.symbol, t.w);
        nt.w = t.w;
        out.terms.push_back(std::move(nt));
    }
    return normalize(std::move(out));
}

Polynomial limit_t0(const ExpSum& s) {
    Polynomial out = poly_zero(s.nvars);
    for (const ExpTerm& t : s.terms) out = out + scalar_mul(t.coeff, t.poly);
    return out;
}

bool check_commutator(const Polynomial& pi_L, const Polynomial& pivee,
                      const Polynomial& f, const std::vector<Rational>& xi) {
    DiffOp d{pi_L};
    GaussianRational lhs = evaluate(apply_diffop_poly(d, pivee * f), xi);
    GaussianRational rhs = evaluate(pivee, xi) * evaluate(apply_diffop_poly(d, f), xi);
    return lhs == rhs;
}

}
