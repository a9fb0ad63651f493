#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace orbitft {

// Permutation of {0..n-1}; img[i] = w(i).
struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(std::vector<int> v) : img(std::move(v)) {}

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i]; }

    static Perm identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return Perm(std::move(v));
    }

    Perm inverse() const {
        std::vector<int> v(img.size());
        for (int i = 0; i < size(); ++i) v[img[i]] = i;
        return Perm(std::move(v));
    }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img[i] != i) return false;
        return true;
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

// (a*b)(i) = a(b(i))
inline Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("perm size mismatch");
    std::vector<int> v(a.size());
    for (int i = 0; i < a.size(); ++i) v[i] = a.img[b.img[i]];
    return Perm(std::move(v));
}

// determinant sign of the permutation matrix
inline int parity_sign(const Perm& w) {
    int n = w.size();
    std::vector<bool> seen(n, false);
    int sign = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = w.img[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

inline Perm transposition(int n, int a, int b) {
    Perm w = Perm::identity(n);
    std::swap(w.img[a], w.img[b]);
    return w;
}

// All of S_n in lexicographic order. Hard bound keeps accidental blowups loud.
inline std::vector<Perm> all_permutations(int n) {
    if (n < 0 || n > 8) throw std::domain_error("symmetric group enumeration supports 0 <= n <= 8");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Perm> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}
