#pragma once

#include <orbitft/rootdata.hpp>
#include <cstdint>
#include <vector>

namespace orbitft {

// Conjugacy class of a block-diagonal Levi subgroup: the multiset of block
// sizes, kept sorted descending.
struct LeviClass {
    std::vector<int> q;

    int n() const;
    friend bool operator==(const LeviClass& a, const LeviClass& b) { return a.q == b.q; }
    friend bool operator<(const LeviClass& a, const LeviClass& b) { return a.q < b.q; }
};

LeviClass make_levi_class(std::vector<int> q);
std::vector<LeviClass> levi_classes(int n);

// A Levi of the given class containing the Cartan: a partition of the slots
// into blocks such that no block splits a conjugate pair. Blocks are sorted
// internally and ordered by (size descending, slots ascending).
struct LeviEmbedding {
    CartanModel cartan;
    std::vector<std::vector<int>> blocks;

    friend bool operator==(const LeviEmbedding& a, const LeviEmbedding& b) {
        return a.cartan == b.cartan && a.blocks == b.blocks;
    }
    friend bool operator<(const LeviEmbedding& a, const LeviEmbedding& b) {
        return a.blocks < b.blocks;
    }
};

LeviEmbedding normalize_embedding(const CartanModel& c, std::vector<std::vector<int>> blocks);
std::vector<LeviEmbedding> enumerate_levis_containing(const CartanModel& c, const LeviClass& cls);

// Deterministic embedding: blocks take pairs greedily (lowest index first),
// then real slots in order. Throws when the class admits no embedding here.
LeviEmbedding standard_embedding(const CartanModel& c, const LeviClass& cls);

LeviClass class_of_embedding(const LeviEmbedding& e);

// Nilpotent orbit attached to the class by induction from zero.
struct OrbitLabel {
    std::vector<int> jordan; // dual partition of the class
    int dim = 0;             // n^2 - sum q_i^2
};

std::vector<int> dual_partition(const std::vector<int>& q);
OrbitLabel orbit_of_levi(const LeviClass& cls);

// |W(G,H)_L| / |W(L,H)|; the stabilizer splits over block pair/real
// signatures, so the quotient is a product of factorials.
std::uint64_t coefficient(const CartanModel& c, const LeviEmbedding& e);

// sum of floor(q_i / 2) over the class
int sum_half_floors(const LeviClass& cls);
// index of the most compact Cartan meeting the class: m - sum_half_floors
int fundamental_cartan_index(const LeviClass& cls);
bool supports(const CartanModel& c, const LeviClass& cls);

// Jordan type of a pseudo-random integer matrix in the strictly block-upper
// nilradical of the class, computed from exact ranks of matrix powers.
std::vector<int> sample_nilradical_jordan_type(const LeviClass& cls, std::uint64_t seed);

}
