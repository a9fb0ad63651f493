#include <orbitft/verify.hpp>
#include <orbitft/serialize.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace orbitft {

std::vector<std::string> suite_names() {
    return {"oracle",   "homogeneity", "matching",   "integrality",     "support",
            "counting", "commutator",  "rossmann",   "regular_elliptic"};
}

std::vector<std::string> run_cells(int jobs, int count, const std::function<std::string(int)>& cell) {
    std::vector<std::string> results(count);
    auto guarded = [&](int i) {
        try {
            results[i] = cell(i);
        } catch (const std::exception& e) {
            results[i] = std::string("exception: ") + e.what();
        }
    };
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) guarded(i);
    } else {
        std::atomic<int> next{0};
        auto worker = [&]() {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) guarded(i);
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<std::string> nonempty;
    for (auto& r : results)
        if (!r.empty()) nonempty.push_back(std::move(r));
    return nonempty;
}

static std::string cls_text(const LeviClass& cls) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < cls.q.size(); ++i) os << (i ? "," : "") << cls.q[i];
    os << ")";
    return os.str();
}

static std::string comp_text(const Component& comp) {
    std::ostringstream os;
    os << "h_" << comp.cartan.l << " order=(";
    for (size_t i = 0; i < comp.real_order.size(); ++i)
        os << (i ? "," : "") << comp.real_order[i] + 1;
    os << ") signs=(";
    for (size_t i = 0; i < comp.pair_signs.size(); ++i)
        os << (i ? "," : "") << (comp.pair_signs[i] > 0 ? "+" : "-");
    os << ")";
    return os.str();
}

struct NilCell {
    LeviClass cls;
    Component comp;
};

static std::string nil_cell_text(const NilCell& c) {
    std::ostringstream os;
    os << "n=" << c.comp.cartan.n << " class=" << cls_text(c.cls) << " " << comp_text(c.comp);
    return os.str();
}

static std::vector<NilCell> nil_cells(int n_max, ComponentLevel level) {
    std::vector<NilCell> out;
    for (int n = 1; n <= n_max; ++n)
        for (const LeviClass& cls : levi_classes(n))
            for (int l = 0; l <= n / 2; ++l)
                for (const Component& comp : enumerate_components(make_cartan(n, l), level))
                    out.push_back({cls, comp});
    return out;
}

static int levi_root_count(const LeviClass& cls) {
    int r = 0;
    for (int q : cls.q) r += q * (q - 1) / 2;
    return r;
}

static SuiteResult suite_oracle(int n_max, int jobs) {
    SuiteResult res;
    res.suite = "oracle";
    std::vector<NilCell> cells = nil_cells(n_max, ComponentLevel::OrdersAndSigns);
    res.cells = static_cast<int>(cells.size());
    res.failures = run_cells(jobs, res.cells, [&](int i) -> std::string {
        const NilCell& c = cells[i];
        ComponentFormula d = nilpotent_ft_direct(c.cls, c.comp);
        ComponentFormula o = nilpotent_ft_oracle(c.cls, c.comp);
        if (d.numerator == o.numerator) return "";
        return "engines disagree at " + nil_cell_text(c);
    });
    return res;
}

static SuiteResult suite_homogeneity(int n_max, int jobs) {
    SuiteResult res;
    res.suite = "homogeneity";
    struct DegCell {
        LeviClass cls;
        int n, l;
    };
    std::vector<DegCell> deg_cells;
    struct RankCell {
        LeviClass cls;
        std::uint64_t seed;
    };
    std::vector<RankCell> rank_cells;
    for (int n = 1; n <= n_max; ++n) {
        std::uint64_t cls_idx = 0;
        for (const LeviClass& cls : levi_classes(n)) {
            for (int l = 0; l <= n / 2; ++l)
                if (supports(make_cartan(n, l), cls)) deg_cells.push_back({cls, n, l});
            for (int s = 0; s < 50; ++s)
                rank_cells.push_back({cls, 1000003ULL * n + 1009ULL * cls_idx + s});
            ++cls_idx;
        }
    }
    res.cells = static_cast<int>(deg_cells.size() + rank_cells.size());
    std::vector<std::string> f1 = run_cells(jobs, static_cast<int>(deg_cells.size()), [&](int i) -> std::string {
        const DegCell& c = deg_cells[i];
        int r_levi = levi_root_count(c.cls);
        int r_group = c.n * (c.n - 1) / 2;
        OrbitLabel orbit = orbit_of_levi(c.cls);
        std::ostringstream id;
        id << "n=" << c.n << " class=" << cls_text(c.cls) << " h_" << c.l;
        if (orbit.dim % 2 != 0 || r_group - r_levi != orbit.dim / 2)
            return "codimension count violates half the orbit dimension at " + id.str();
        Component comp = canonical_component(make_cartan(c.n, c.l));
        ComponentFormula d = nilpotent_ft_direct(c.cls, comp);
        if (d.is_zero()) return "unexpected zero formula at " + id.str();
        if (!d.numerator.is_homogeneous() || d.numerator.total_degree() != r_levi)
            return "direct numerator degree differs from the levi root count at " + id.str();
        for (const FactoredTerm& t : d.factored)
            if (static_cast<int>(t.roots.size()) != r_levi)
                return "factored root list length differs from the levi root count at " + id.str();
        ComponentFormula o = nilpotent_ft_oracle(c.cls, comp);
        if (!o.numerator.is_homogeneous() || o.numerator.total_degree() != r_levi)
            return "derivative-limit numerator degree differs from the levi root count at " + id.str();
        if (o.i_power != r_levi % 4) return "phase power differs from the levi root count at " + id.str();
        return "";
    });
    std::vector<std::string> f2 = run_cells(jobs, static_cast<int>(rank_cells.size()), [&](int i) -> std::string {
        const RankCell& c = rank_cells[i];
        std::vector<int> jt = sample_nilradical_jordan_type(c.cls, c.seed);
        if (jt == dual_partition(c.cls.q)) return "";
        std::ostringstream os;
        os << "rank-of-powers jordan type differs from the dual partition for class " << cls_text(c.cls)
           << " seed=" << c.seed;
        return os.str();
    });
    res.failures = std::move(f1);
    res.failures.insert(res.failures.end(), f2.begin(), f2.end());
    return res;
}

static SuiteResult suite_matching(int n_max, int jobs) {
    SuiteResult res;
    res.suite = "matching";
    struct MatchCell {
        int k;
        Component c1;
        Component c2;
    };
    std::vector<MatchCell> cells;
    for (int n = 2; n <= n_max; ++n) {
        int m = n / 2;
        for (int l = 0; l + 1 <= m; ++l) {
            CartanModel h1 = make_cartan(n, l);
            CartanModel h2 = make_cartan(n, l + 1);
            int a = 2 * l, b = a + 1;
            for (const Component& c1 : enumerate_components(h1, ComponentLevel::Orders)) {
                int len = static_cast<int>(c1.real_order.size());
                for (int pos = 0; pos <= len; ++pos) {
                    for (int flip = 0; flip < 2; ++flip) {
                        Component c2;
                        c2.cartan = h2;
                        c2.real_order = c1.real_order;
                        c2.real_order.insert(c2.real_order.begin() + pos, flip ? b : a);
                        c2.real_order.insert(c2.real_order.begin() + pos + 1, flip ? a : b);
                        c2.pair_signs.assign(h2.num_pairs(), 1);
                        for (int k = 0; k <= m; ++k) cells.push_back({k, c1, c2});
                    }
                }
            }
        }
    }
    res.cells = static_cast<int>(cells.size());
    res.failures = run_cells(jobs, res.cells, [&](int i) -> std::string {
        const MatchCell& c = cells[i];
        MatchingReport rep = check_matching(c.k, c.c1, c.c2);
        if (rep.ok) return "";
        std::ostringstream os;
        os << "two-term relations fail for k=" << c.k << " between " << comp_text(c.c1) << " and "
           << comp_text(c.c2) << " (" << rep.failures.size() << " of " << rep.relations << "): "
           << rep.failures.front();
        return os.str();
    });
    return res;
}

static SuiteResult suite_integrality(int n_max, int jobs) {
    SuiteResult res;
    res.suite = "integrality";
    std::vector<NilCell> cells = nil_cells(n_max, ComponentLevel::OrdersAndSigns);
    res.cells = static_cast<int>(2 * cells.size());
    res.failures = run_cells(jobs, res.cells, [&](int i) -> std::string {
        const NilCell& c = cells[i / 2];
        bool use_oracle = (i % 2) == 1;
        ComponentFormula f =
            use_oracle ? nilpotent_ft_oracle(c.cls, c.comp) : nilpotent_ft_direct(c.cls, c.comp);
        if (f.is_zero()) return "";
        IntegralityReport rep = check_integrality_and_positivity(f);
        if (rep.ok()) return "";
        std::ostringstream os;
        os << f.engine << " formula fails ";
        if (!rep.imaginary_zero) os << "imaginary-part vanishing";
        else if (!rep.expanded_integral) os << "expanded integrality";
        else os << "factored positive integrality";
        os << " at " << nil_cell_text(c);
        return os.str();
    });
    return res;
}

static SuiteResult suite_support(int n_max, int jobs) {
    SuiteResult res;
    res.suite = "support";
    std::vector<NilCell> cells = nil_cells(n_max, ComponentLevel::OrdersAndSigns);
    res.cells = static_cast<int>(cells.size());
    res.failures = run_cells(jobs, res.cells, [&](int i) -> std::string {
        const NilCell& c = cells[i];
        bool expect = supports(c.comp.cartan, c.cls);
        ComponentFormula d = nilpotent_ft_direct(c.cls, c.comp);
        ComponentFormula o = nilpotent_ft_oracle(c.cls, c.comp);
        if (d.is_zero() == o.is_zero() && !d.is_zero() == expect) return "";
        return "vanishing set disagrees with the floor-sum rule at " + nil_cell_text(c);
    });
    return res;
}

static std::vector<std::vector<int>> as_partition(const std::vector<std::vector<int>>& blocks) {
    std::vector<std::vector<int>> out = blocks;
    for (auto& b : out) std::sort(b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

static SuiteResult suite_counting(int n_max, int jobs) {
    SuiteResult res;
    res.suite = "counting";
    struct CountCell {
        LeviClass cls;
        int n, l, k;
    };
    std::vector<CountCell> cells;
    for (int n = 1; n <= n_max; ++n) {
        int m = n / 2;
        for (const LeviClass& cls : levi_classes(n)) {
            int k = sum_half_floors(cls);
            for (int l = std::max(m - k, k); l <= m; ++l) cells.push_back({cls, n, l, k});
        }
    }
    res.cells = static_cast<int>(cells.size());
    std::vector<std::string> raw = run_cells(jobs, res.cells, [&](int i) -> std::string {
        const CountCell& c = cells[i];
        CartanModel hk = make_cartan(c.n, c.k);
        CartanModel hl = make_cartan(c.n, c.l);
        LeviEmbedding ref =
            supports(hk, c.cls) ? standard_embedding(hk, c.cls) : standard_embedding(hl, c.cls);
        WklSet wkl = compute_wkl(hk, hl);
        std::uint64_t pow2 = std::uint64_t{1} << (c.l - c.k);
        int quotient_instances = 0;
        for (const LeviEmbedding& lp : enumerate_levis_containing(hl, c.cls)) {
            std::vector<std::vector<int>> target = as_partition(lp.blocks);
            std::uint64_t cnt = 0;
            for (const WklElement& el : wkl.members) {
                std::vector<std::vector<int>> img;
                for (const auto& b : ref.blocks) {
                    std::vector<int> nb;
                    for (int s : b) nb.push_back(el.w(s));
                    img.push_back(std::move(nb));
                }
                if (as_partition(img) == target) ++cnt;
            }
            std::uint64_t stab = stabilizer_of_levi(hl, lp.blocks).size();
            if (pow2 * cnt != stab) {
                std::ostringstream os;
                os << "orbit count identity fails at n=" << c.n << " class=" << cls_text(c.cls)
                   << " k=" << c.k << " l=" << c.l << ": 2^" << (c.l - c.k) << " * " << cnt
                   << " != " << stab;
                return os.str();
            }
            if (cnt > 0 && pow2 == cnt * stab) ++quotient_instances;
        }
        if (quotient_instances > 0) {
            std::ostringstream os;
            os << "note: quotient form holds " << quotient_instances << " time(s) at n=" << c.n
               << " class=" << cls_text(c.cls) << " k=" << c.k << " l=" << c.l;
            return os.str();
        }
        return "";
    });
    for (auto& r : raw) {
        if (r.rfind("note: ", 0) == 0) res.notes.push_back(r.substr(6));
        else res.failures.push_back(std::move(r));
    }
    return res;
}

static Polynomial random_poly(int n, std::mt19937_64& rng) {
    Polynomial f = poly_zero(n);
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        Exponents e(n, 0);
        int deg = static_cast<int>(rng() % 5);
        for (int d = 0; d < deg; ++d) e[rng() % n] += 1;
        long co = static_cast<long>(rng() % 11) - 5;
        if (co == 0) co = 1;
        Polynomial mono = poly_constant(n, GaussianRational(co));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < e[i]; ++k) mono = mono * poly_variable(n, i);
        f = f + mono;
    }
    return f;
}

static SuiteResult suite_commutator(int n_max, int jobs) {
    SuiteResult res;
    res.suite = "commutator";
    struct ComCell {
        LeviClass cls;
        int n;
        std::uint64_t seed;
    };
    std::vector<ComCell> cells;
    for (int n = 1; n <= n_max; ++n) {
        std::uint64_t cls_idx = 0;
        for (const LeviClass& cls : levi_classes(n)) {
            for (int t = 0; t < 20; ++t)
                cells.push_back({cls, n, 7919ULL * n + 104729ULL * cls_idx + t});
            ++cls_idx;
        }
    }
    res.cells = static_cast<int>(cells.size());
    res.failures = run_cells(jobs, res.cells, [&](int i) -> std::string {
        const ComCell& c = cells[i];
        CartanModel split = make_cartan(c.n, c.n / 2);
        PositiveSystem ps = canonical_positive_system(canonical_component(split));
        LeviEmbedding levi = standard_embedding(split, c.cls);
        std::vector<Root> inside = levi_positive_roots(ps, levi);
        std::vector<Root> outside;
        for (const Root& r : ps.positives)
            if (std::find(inside.begin(), inside.end(), r) == inside.end()) outside.push_back(r);
        Polynomial pi_levi = product_of_roots(c.n, inside);
        Polynomial pivee = product_of_roots(c.n, outside);
        std::vector<Rational> xi(c.n);
        for (size_t bi = 0; bi < levi.blocks.size(); ++bi)
            for (int s : levi.blocks[bi]) xi[s] = Rational(static_cast<long>(bi) + 1);
        std::mt19937_64 rng(c.seed);
        Polynomial f = random_poly(c.n, rng);
        if (check_commutator(pi_levi, pivee, f, xi)) return "";
        std::ostringstream os;
        os << "derivative commutation fails at n=" << c.n << " class=" << cls_text(c.cls)
           << " seed=" << c.seed;
        return os.str();
    });
    return res;
}

static SuiteResult suite_rossmann(int n_max, int jobs) {
    SuiteResult res;
    res.suite = "rossmann";
    struct RCell {
        int n, l; // l = -1: sign character comparison on the most compact cartan
    };
    std::vector<RCell> cells;
    for (int n = 1; n <= n_max; ++n) {
        for (int l = 0; l <= n / 2; ++l) cells.push_back({n, l});
        cells.push_back({n, -1});
    }
    res.cells = static_cast<int>(cells.size());
    res.failures = run_cells(jobs, res.cells, [&](int i) -> std::string {
        const RCell& c = cells[i];
        if (c.l < 0) {
            CartanModel h0 = make_cartan(c.n, 0);
            PositiveSystem ps = canonical_positive_system(canonical_component(h0));
            for (const Perm& w : real_weyl(h0))
                if (epsilon_imaginary(ps, w) != parity_sign(w)) {
                    std::ostringstream os;
                    os << "imaginary sign character differs from the determinant at n=" << c.n;
                    return os.str();
                }
            return "";
        }
        Component comp = canonical_component(make_cartan(c.n, c.l));
        SemisimpleFormula ss = semisimple_ft(c.l, comp);
        SemisimpleFormula ro = rossmann_ft(comp);
        std::ostringstream id;
        id << "n=" << c.n << " l=" << c.l;
        if (ss.numerator.terms.size() != ro.numerator.terms.size())
            return "chamber sum and eigendistribution sum have different supports at " + id.str();
        int q = c.n / 2 - c.l;
        GaussianRational sign(q % 2 == 0 ? 1 : -1);
        for (size_t t = 0; t < ss.numerator.terms.size(); ++t) {
            const ExpTerm& a = ss.numerator.terms[t];
            const ExpTerm& b = ro.numerator.terms[t];
            if (!(a.w == b.w))
                return "chamber sum and eigendistribution sum have different supports at " + id.str();
            if (!(b.coeff == sign * a.coeff))
                return "term signs differ from the single global sign at " + id.str();
        }
        return "";
    });
    return res;
}

static SuiteResult suite_regular_elliptic(int n_max, int jobs) {
    SuiteResult res;
    res.suite = "regular_elliptic";
    std::vector<int> ns;
    for (int n = 2; n <= n_max; n += 2) ns.push_back(n);
    res.cells = static_cast<int>(ns.size());
    res.failures = run_cells(jobs, res.cells, [&](int i) -> std::string {
        int n = ns[i];
        int m = n / 2;
        WklSet wkl = compute_wkl(make_cartan(n, 0), make_cartan(n, m));
        long signed_sum = 0;
        for (const WklElement& el : wkl.members) signed_sum += el.eps;
        long frozen = -1;
        if (n == 2) frozen = 1;
        if (n == 4) frozen = 6;
        if (n == 6) frozen = 90;
        std::ostringstream id;
        id << "n=" << n;
        if (frozen >= 0 && signed_sum != frozen) {
            std::ostringstream os;
            os << "signed count " << signed_sum << " differs from the frozen value " << frozen
               << " at " << id.str();
            return os.str();
        }
        long fact = 1;
        for (int j = 2; j <= n; ++j) fact *= j;
        if ((1L << m) * signed_sum != fact) {
            std::ostringstream os;
            os << "2^m times the signed count is " << ((1L << m) * signed_sum) << ", not " << n
               << "! = " << fact << " at " << id.str();
            return os.str();
        }
        return "";
    });
    return res;
}

SuiteResult run_suite(const std::string& name, int n_max, int jobs) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult res;
    if (name == "oracle") res = suite_oracle(n_max, jobs);
    else if (name == "homogeneity") res = suite_homogeneity(n_max, jobs);
    else if (name == "matching") res = suite_matching(n_max, jobs);
    else if (name == "integrality") res = suite_integrality(n_max, jobs);
    else if (name == "support") res = suite_support(n_max, jobs);
    else if (name == "counting") res = suite_counting(n_max, jobs);
    else if (name == "commutator") res = suite_commutator(n_max, jobs);
    else if (name == "rossmann") res = suite_rossmann(n_max, jobs);
    else if (name == "regular_elliptic") res = suite_regular_elliptic(n_max, jobs);
    else throw std::invalid_argument("unknown suite: " + name);
    auto end = std::chrono::steady_clock::now();
    res.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return res;
}

}
