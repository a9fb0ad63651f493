#include <orbitft/weylgroups.hpp>

#include <algorithm>
#include <stdexcept>

namespace orbitft {

std::vector<Perm> enumerate_complex_weyl(int n) {
    return all_permutations(n);
}

static bool preserves_real_structure(const CartanModel& c, const Perm& w) {
    for (int p = 0; p < c.n; ++p) {
        if (c.is_real_slot(p)) {
            if (!c.is_real_slot(w(p))) return false;
        } else {
            if (c.is_real_slot(w(p))) return false;
            if (w(c.conjugate_slot(p)) != c.conjugate_slot(w(p))) return false;
        }
    }
    return true;
}

std::vector<Perm> real_weyl(const CartanModel& c) {
    std::vector<Perm> out;
    for (const Perm& w : all_permutations(c.n))
        if (preserves_real_structure(c, w)) out.push_back(w);
    return out;
}

std::uint64_t real_weyl_order(const CartanModel& c) {
    std::uint64_t f = 1;
    for (int i = 2; i <= c.num_pairs(); ++i) f *= i;
    std::uint64_t g = 1;
    for (int i = 2; i <= c.num_reals(); ++i) g *= i;
    return (std::uint64_t{1} << c.num_pairs()) * f * g;
}

int epsilon_imaginary(const PositiveSystem& ps, const Perm& w) {
    int flips = 0;
    for (const Root& a : positive_imaginary_roots(ps)) {
        Root wa{w(a.p), w(a.q)};
        if (is_positive(ps, wa)) continue;
        if (is_positive(ps, negate_root(wa))) {
            if (classify_root(ps.component.cartan, wa) != RootType::Imaginary)
                throw std::invalid_argument("w does not normalize the imaginary roots");
            ++flips;
        } else {
            throw std::logic_error("root missing from positive system");
        }
    }
    return flips % 2 == 0 ? 1 : -1;
}

WklSet compute_wkl(const CartanModel& hk, const CartanModel& hl) {
    if (hk.n != hl.n) throw std::invalid_argument("cartan rank mismatch");
    int n = hk.n;
    WklSet out;
    out.n = n;
    out.k = hk.l;
    out.l = hl.l;
    auto hl_pairs = hl.pairs();
    auto hk_pairs = hk.pairs();
    for (const Perm& w : all_permutations(n)) {
        Perm winv = w.inverse();
        bool ok = true;
        // (i) imaginary at h_l pulls back to imaginary at h_k
        for (const auto& [a, b] : hl_pairs) {
            int pa = winv(a), pb = winv(b);
            if (hk.is_real_slot(pa) || hk.conjugate_slot(pa) != pb) {
                ok = false;
                break;
            }
        }
        // (ii) complex at h_l pulls back to complex at h_k
        if (ok) {
            for (int p = 0; p < n && ok; ++p) {
                for (int q = p + 1; q < n && ok; ++q) {
                    if (classify_root(hl, {p, q}) != RootType::Complex) continue;
                    if (classify_root(hk, {winv(p), winv(q)}) != RootType::Complex) ok = false;
                }
            }
        }
        // (iii) positive imaginary at h_k pushes to imaginary, or to positive
        // real, at h_l
        int flips = 0;
        if (ok) {
            for (const auto& [a, b] : hk_pairs) {
                Root wa{w(a), w(b)};
                RootType t = classify_root(hl, wa);
                if (t == RootType::Imaginary) continue;
                if (t == RootType::Real && wa.p < wa.q) continue;
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // sign: count positive imaginary roots of h_l whose pullback is a
        // negatively oriented pair of h_k
        for (const auto& [a, b] : hl_pairs)
            if (winv(a) > winv(b)) ++flips;
        out.members.push_back({w, flips % 2 == 0 ? 1 : -1});
    }
    std::sort(out.members.begin(), out.members.end(),
              [](const WklElement& x, const WklElement& y) { return x.w < y.w; });
    return out;
}

static void validate_blocks(const CartanModel& c, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> seen;
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty levi block");
        if (!std::is_sorted(b.begin(), b.end())) throw std::invalid_argument("levi block not sorted");
        seen.insert(seen.end(), b.begin(), b.end());
    }
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < c.n; ++i)
        if (i >= static_cast<int>(seen.size()) || seen[i] != i)
            throw std::invalid_argument("levi blocks do not partition the slots");
}

static std::vector<std::vector<int>> apply_to_blocks(const Perm& w, const std::vector<std::vector<int>>& blocks) {
    std::vector<std::vector<int>> out;
    for (const auto& b : blocks) {
        std::vector<int> nb;
        for (int s : b) nb.push_back(w(s));
        std::sort(nb.begin(), nb.end());
        out.push_back(std::move(nb));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> stabilizer_of_levi(const CartanModel& c, const std::vector<std::vector<int>>& blocks) {
    validate_blocks(c, blocks);
    std::vector<std::vector<int>> ref = blocks;
    std::sort(ref.begin(), ref.end());
    std::vector<Perm> out;
    for (const Perm& w : real_weyl(c))
        if (apply_to_blocks(w, blocks) == ref) out.push_back(w);
    return out;
}

std::vector<Perm> real_weyl_of_levi(const CartanModel& c, const std::vector<std::vector<int>>& blocks) {
    validate_blocks(c, blocks);
    std::vector<Perm> out;
    for (const Perm& w : real_weyl(c)) {
        bool fixes = true;
        for (const auto& b : blocks) {
            std::vector<int> nb;
            for (int s : b) nb.push_back(w(s));
            std::sort(nb.begin(), nb.end());
            if (nb != b) {
                fixes = false;
                break;
            }
        }
        if (fixes) out.push_back(w);
    }
    return out;
}

std::uint64_t real_weyl_of_levi_order(const CartanModel& c, const std::vector<std::vector<int>>& blocks) {
    validate_blocks(c, blocks);
    std::uint64_t order = 1;
    for (const auto& b : blocks) {
        int pairs = 0, reals = 0;
        for (int s : b) {
            if (c.is_real_slot(s)) {
                ++reals;
            } else {
                if (std::find(b.begin(), b.end(), c.conjugate_slot(s)) == b.end())
                    throw std::invalid_argument("levi block splits a conjugate pair");
                ++pairs;
            }
        }
        pairs /= 2;
        std::uint64_t f = 1;
        for (int i = 2; i <= pairs; ++i) f *= i;
        std::uint64_t g = 1;
        for (int i = 2; i <= reals; ++i) g *= i;
        order *= (std::uint64_t{1} << pairs) * f * g;
    }
    return order;
}

}
