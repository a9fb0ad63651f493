#include <orbitft/levi.hpp>

#include <algorithm>
#include <gmpxx.h>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace orbitft {

int LeviClass::n() const {
    return std::accumulate(q.begin(), q.end(), 0);
}

LeviClass make_levi_class(std::vector<int> q) {
    if (q.empty()) throw std::invalid_argument("empty levi class");
    for (int v : q)
        if (v < 1) throw std::invalid_argument("levi block sizes must be positive");
    std::sort(q.begin(), q.end(), std::greater<int>());
    return LeviClass{std::move(q)};
}

static void partitions_rec(int n, int maxpart, std::vector<int>& cur, std::vector<LeviClass>& out) {
    if (n == 0) {
        out.push_back(LeviClass{cur});
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<LeviClass> levi_classes(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<LeviClass> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

static bool block_size_order(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

LeviEmbedding normalize_embedding(const CartanModel& c, std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(), block_size_order);
    // no block may split a conjugate pair
    for (const auto& b : blocks)
        for (int s : b)
            if (!c.is_real_slot(s) && !std::binary_search(b.begin(), b.end(), c.conjugate_slot(s)))
                throw std::invalid_argument("levi block splits a conjugate pair");
    return LeviEmbedding{c, std::move(blocks)};
}

// atoms: conjugate pairs first (by pair index), then real slots
static std::vector<std::vector<int>> atoms_of(const CartanModel& c) {
    std::vector<std::vector<int>> atoms;
    for (const auto& [a, b] : c.pairs()) atoms.push_back({a, b});
    for (int s : c.real_slots()) atoms.push_back({s});
    return atoms;
}

static void assign_atoms(const std::vector<std::vector<int>>& atoms, size_t t,
                         const std::vector<int>& cap, std::vector<int>& used,
                         std::vector<std::vector<int>>& contents,
                         const CartanModel& c, std::vector<LeviEmbedding>& out) {
    if (t == atoms.size()) {
        out.push_back(normalize_embedding(c, contents));
        return;
    }
    int weight = static_cast<int>(atoms[t].size());
    for (size_t i = 0; i < cap.size(); ++i) {
        if (used[i] + weight > cap[i]) continue;
        if (used[i] == 0) {
            // among equal-capacity empty blocks only the first may open
            bool earlier_empty_same_cap = false;
            for (size_t j = 0; j < i; ++j)
                if (used[j] == 0 && cap[j] == cap[i]) {
                    earlier_empty_same_cap = true;
                    break;
                }
            if (earlier_empty_same_cap) continue;
        }
        used[i] += weight;
        for (int s : atoms[t]) contents[i].push_back(s);
        assign_atoms(atoms, t + 1, cap, used, contents, c, out);
        for (size_t k = 0; k < atoms[t].size(); ++k) contents[i].pop_back();
        used[i] -= weight;
    }
}

std::vector<LeviEmbedding> enumerate_levis_containing(const CartanModel& c, const LeviClass& cls) {
    if (cls.n() != c.n) throw std::invalid_argument("levi class size mismatch");
    std::vector<std::vector<int>> atoms = atoms_of(c);
    std::vector<int> used(cls.q.size(), 0);
    std::vector<std::vector<int>> contents(cls.q.size());
    std::vector<LeviEmbedding> out;
    assign_atoms(atoms, 0, cls.q, used, contents, c, out);
    std::sort(out.begin(), out.end());
    return out;
}

LeviEmbedding standard_embedding(const CartanModel& c, const LeviClass& cls) {
    if (cls.n() != c.n) throw std::invalid_argument("levi class size mismatch");
    auto pairs = c.pairs();
    auto reals = c.real_slots();
    size_t pi = 0, ri = 0;
    std::vector<std::vector<int>> blocks;
    for (int q : cls.q) {
        std::vector<int> b;
        int want_pairs = q / 2;
        while (want_pairs > 0 && pi < pairs.size()) {
            b.push_back(pairs[pi].first);
            b.push_back(pairs[pi].second);
            ++pi;
            --want_pairs;
        }
        while (static_cast<int>(b.size()) < q && ri < reals.size()) b.push_back(reals[ri++]);
        if (static_cast<int>(b.size()) != q)
            throw std::invalid_argument("class admits no embedding at this cartan");
        blocks.push_back(std::move(b));
    }
    if (pi != pairs.size())
        throw std::invalid_argument("class admits no embedding at this cartan");
    return normalize_embedding(c, std::move(blocks));
}

LeviClass class_of_embedding(const LeviEmbedding& e) {
    std::vector<int> q;
    for (const auto& b : e.blocks) q.push_back(static_cast<int>(b.size()));
    return make_levi_class(std::move(q));
}

std::vector<int> dual_partition(const std::vector<int>& q) {
    if (q.empty()) return {};
    std::vector<int> out;
    for (int j = 1; j <= q[0]; ++j) {
        int cnt = 0;
        for (int v : q)
            if (v >= j) ++cnt;
        out.push_back(cnt);
    }
    return out;
}

OrbitLabel orbit_of_levi(const LeviClass& cls) {
    OrbitLabel o;
    o.jordan = dual_partition(cls.q);
    int n = cls.n();
    int sq = 0;
    for (int v : cls.q) sq += v * v;
    o.dim = n * n - sq;
    return o;
}

std::uint64_t coefficient(const CartanModel& c, const LeviEmbedding& e) {
    // the block stabilizer splits as (permutations of blocks with equal
    // pair/real signature) x (real weyl of the levi), so the quotient is a
    // product of factorials of signature multiplicities
    std::map<std::pair<int, int>, int> sig_count;
    for (const auto& b : e.blocks) {
        int complex_slots = 0;
        for (int s : b)
            if (!c.is_real_slot(s)) ++complex_slots;
        sig_count[{complex_slots / 2, static_cast<int>(b.size()) - complex_slots}] += 1;
    }
    std::uint64_t co = 1;
    for (const auto& [sig, cnt] : sig_count)
        for (int t = 2; t <= cnt; ++t) co *= static_cast<std::uint64_t>(t);
    return co;
}

int sum_half_floors(const LeviClass& cls) {
    int s = 0;
    for (int v : cls.q) s += v / 2;
    return s;
}

int fundamental_cartan_index(const LeviClass& cls) {
    return cls.n() / 2 - sum_half_floors(cls);
}

bool supports(const CartanModel& c, const LeviClass& cls) {
    if (cls.n() != c.n) throw std::invalid_argument("levi class size mismatch");
    return c.l >= fundamental_cartan_index(cls);
}

// exact rank over Q by Gaussian elimination
static int rank_of(std::vector<std::vector<mpq_class>> a) {
    int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(a[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            mpq_class f = a[r][col] / a[rank][col];
            for (int cc = col; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
        }
        ++rank;
    }
    return rank;
}

std::vector<int> sample_nilradical_jordan_type(const LeviClass& cls, std::uint64_t seed) {
    int n = cls.n();
    // block starts for descending sizes
    std::vector<int> start;
    int acc = 0;
    for (int v : cls.q) {
        start.push_back(acc);
        acc += v;
    }
    auto block_of = [&](int idx) {
        for (size_t i = start.size(); i-- > 0;)
            if (idx >= start[i]) return static_cast<int>(i);
        return 0;
    };
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(1, 1000000);
    std::vector<std::vector<mpq_class>> N(n, std::vector<mpq_class>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int cc = 0; cc < n; ++cc)
            if (block_of(r) < block_of(cc)) N[r][cc] = dist(rng);
    // ranks of powers N^0..N^n
    std::vector<int> ranks;
    std::vector<std::vector<mpq_class>> P(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) P[i][i] = 1;
    for (int pow = 0; pow <= n; ++pow) {
        ranks.push_back(rank_of(P));
        std::vector<std::vector<mpq_class>> Q(n, std::vector<mpq_class>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (P[i][j] == 0) continue;
                for (int k = 0; k < n; ++k) Q[i][k] += P[i][j] * N[j][k];
            }
        P = std::move(Q);
    }
    // #{jordan blocks of length >= j} = rank(N^{j-1}) - rank(N^j)
    std::vector<int> at_least(n + 2, 0);
    for (int j = 1; j <= n; ++j) at_least[j] = ranks[j - 1] - ranks[j];
    std::vector<int> jordan;
    for (int j = 1; j <= n; ++j)
        for (int rep = 0; rep < at_least[j] - at_least[j + 1]; ++rep) jordan.push_back(j);
    std::sort(jordan.begin(), jordan.end(), std::greater<int>());
    return jordan;
}

}
