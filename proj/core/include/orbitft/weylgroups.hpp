#pragma once

#include <orbitft/perm.hpp>
#include <orbitft/rootdata.hpp>
#include <cstdint>
#include <vector>

namespace orbitft {

// W(g, h) for gl(n): all of S_n acting by slot permutation.
std::vector<Perm> enumerate_complex_weyl(int n);

// Real points subgroup W(G, H_l): permutations mapping pairs to pairs
// (possibly flipping members) and real slots to real slots.
std::vector<Perm> real_weyl(const CartanModel& c);
std::uint64_t real_weyl_order(const CartanModel& c);

// sign of w acting on the product of positive imaginary roots; w must
// normalize the imaginary root set
int epsilon_imaginary(const PositiveSystem& ps, const Perm& w);

struct WklElement {
    Perm w;
    int eps; // (-1)^{# imaginary positives of h_l pulled back to negatives at h_k}
};

// Cross-Cartan comparison set between h_k and h_l, cut out by:
//   (i)  imaginary roots of h_l pull back to imaginary roots of h_k,
//   (ii) complex roots of h_l pull back to complex roots of h_k,
//  (iii) positive imaginary roots of h_k push forward to imaginary roots of
//        h_l or to positive real roots of h_l.
// Positivity is taken in the canonical components of both Cartans.
struct WklSet {
    int n = 0;
    int k = 0;
    int l = 0;
    std::vector<WklElement> members; // sorted by permutation
};

WklSet compute_wkl(const CartanModel& hk, const CartanModel& hl);

// Elements of real_weyl(c) permuting the given blocks among themselves.
// Blocks must partition the slots; each block is a sorted slot list.
std::vector<Perm> stabilizer_of_levi(const CartanModel& c, const std::vector<std::vector<int>>& blocks);

// Elements of real_weyl(c) fixing every block setwise; this is the real Weyl
// group of the block Levi with respect to the same Cartan.
std::vector<Perm> real_weyl_of_levi(const CartanModel& c, const std::vector<std::vector<int>>& blocks);
std::uint64_t real_weyl_of_levi_order(const CartanModel& c, const std::vector<std::vector<int>>& blocks);

}
