#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orbitft/weylgroups.hpp>

#include <numeric>

using namespace orbitft;

TEST_CASE("real weyl group enumeration matches its closed-form order") {
    for (int n = 1; n <= 5; ++n) {
        for (int l = 0; l <= n / 2; ++l) {
            CartanModel c = make_cartan(n, l);
            CHECK(real_weyl(c).size() == real_weyl_order(c));
        }
    }
    // 2^{m-l} (m-l)! (2l+delta)!
    CHECK(real_weyl_order(make_cartan(4, 0)) == 8);
    CHECK(real_weyl_order(make_cartan(4, 1)) == 4);
    CHECK(real_weyl_order(make_cartan(4, 2)) == 24);
    CHECK(real_weyl_order(make_cartan(5, 0)) == 8);
    CHECK(real_weyl_order(make_cartan(5, 1)) == 12);
    CHECK(real_weyl_order(make_cartan(5, 2)) == 120);
    CHECK(enumerate_complex_weyl(4).size() == 24);
}

TEST_CASE("real weyl elements preserve the pair and real slot structure") {
    CartanModel c = make_cartan(4, 1);
    for (const Perm& w : real_weyl(c)) {
        for (int s : c.real_slots()) CHECK(c.is_real_slot(w(s)));
        for (const auto& [a, b] : c.pairs()) CHECK(w(b) == c.conjugate_slot(w(a)));
    }
}

TEST_CASE("epsilon counts positive imaginary roots pulled to negatives") {
    CartanModel c = make_cartan(4, 0);
    PositiveSystem ps = canonical_positive_system(canonical_component(c));
    CHECK(epsilon_imaginary(ps, Perm::identity(4)) == 1);
    CHECK(epsilon_imaginary(ps, transposition(4, 0, 1)) == -1);
    // swapping the two pairs keeps both imaginary roots positive
    CHECK(epsilon_imaginary(ps, Perm({2, 3, 0, 1})) == 1);
    // on the fundamental cartan the character is the determinant
    for (int n = 1; n <= 5; ++n) {
        CartanModel h0 = make_cartan(n, 0);
        PositiveSystem p0 = canonical_positive_system(canonical_component(h0));
        for (const Perm& w : real_weyl(h0)) CHECK(epsilon_imaginary(p0, w) == parity_sign(w));
    }
}

static long signed_sum(const WklSet& s) {
    long acc = 0;
    for (const WklElement& el : s.members) acc += el.eps;
    return acc;
}

TEST_CASE("cross-cartan sets freeze at small rank") {
    WklSet w00 = compute_wkl(make_cartan(2, 0), make_cartan(2, 0));
    REQUIRE(w00.members.size() == 2);
    CHECK(w00.members[0].w == Perm::identity(2));
    CHECK(w00.members[0].eps == 1);
    CHECK(w00.members[1].w == Perm({1, 0}));
    CHECK(w00.members[1].eps == -1);

    WklSet w01 = compute_wkl(make_cartan(2, 0), make_cartan(2, 1));
    REQUIRE(w01.members.size() == 1);
    CHECK(w01.members[0].w == Perm::identity(2));
    CHECK(w01.members[0].eps == 1);

    CHECK(compute_wkl(make_cartan(2, 1), make_cartan(2, 0)).members.empty());

    WklSet w11 = compute_wkl(make_cartan(2, 1), make_cartan(2, 1));
    REQUIRE(w11.members.size() == 2);
    CHECK(w11.members[0].eps == 1);
    CHECK(w11.members[1].eps == 1);

    CHECK(compute_wkl(make_cartan(4, 0), make_cartan(4, 1)).members.size() == 4);
    CHECK(signed_sum(compute_wkl(make_cartan(4, 0), make_cartan(4, 1))) == 0);
    CHECK(compute_wkl(make_cartan(4, 0), make_cartan(4, 2)).members.size() == 6);
    CHECK(compute_wkl(make_cartan(4, 1), make_cartan(4, 1)).members.size() == 4);
    CHECK(signed_sum(compute_wkl(make_cartan(4, 1), make_cartan(4, 1))) == 0);
    CHECK(compute_wkl(make_cartan(4, 1), make_cartan(4, 2)).members.size() == 12);
    CHECK(compute_wkl(make_cartan(4, 2), make_cartan(4, 2)).members.size() == 24);
    CHECK(compute_wkl(make_cartan(5, 0), make_cartan(5, 1)).members.size() == 12);
    CHECK(compute_wkl(make_cartan(5, 0), make_cartan(5, 2)).members.size() == 30);

    // vanishing side: no elements when the target is more compact
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= n / 2; ++k)
            for (int l = 0; l < k; ++l)
                CHECK(compute_wkl(make_cartan(n, k), make_cartan(n, l)).members.empty());
}

TEST_CASE("signed counts match the factorial identity for even rank") {
    // 2^m * sum of eps over the fundamental-to-split set = n!
    CHECK(signed_sum(compute_wkl(make_cartan(2, 0), make_cartan(2, 1))) == 1);
    CHECK(signed_sum(compute_wkl(make_cartan(4, 0), make_cartan(4, 2))) == 6);
    CHECK(signed_sum(compute_wkl(make_cartan(6, 0), make_cartan(6, 3))) == 90);
}

TEST_CASE("block stabilizer and pointwise block subgroup freeze at small rank") {
    CartanModel split4 = make_cartan(4, 2);
    std::vector<std::vector<int>> b22 = {{0, 1}, {2, 3}};
    CHECK(stabilizer_of_levi(split4, b22).size() == 8);
    CHECK(real_weyl_of_levi(split4, b22).size() == 4);
    CHECK(real_weyl_of_levi_order(split4, b22) == 4);

    CartanModel fund4 = make_cartan(4, 0);
    CHECK(stabilizer_of_levi(fund4, b22).size() == 8);
    CHECK(real_weyl_of_levi_order(fund4, b22) == 4);

    CartanModel mix4 = make_cartan(4, 1);
    CHECK(stabilizer_of_levi(mix4, b22).size() == 4);
    CHECK(real_weyl_of_levi_order(mix4, b22) == 4);

    std::vector<std::vector<int>> b211 = {{0, 1}, {2}, {3}};
    CHECK(stabilizer_of_levi(split4, b211).size() == 4);
    CHECK(real_weyl_of_levi_order(split4, b211) == 2);

    CartanModel split3 = make_cartan(3, 1);
    std::vector<std::vector<int>> b111 = {{0}, {1}, {2}};
    CHECK(stabilizer_of_levi(split3, b111).size() == 6);
    CHECK(real_weyl_of_levi(split3, b111).size() == 1);

    // the closed form matches the enumeration wherever blocks embed
    for (int n = 1; n <= 4; ++n) {
        for (int l = 0; l <= n / 2; ++l) {
            CartanModel c = make_cartan(n, l);
            std::vector<std::vector<int>> singles;
            for (int s = 0; s < n; ++s) singles.push_back({s});
            if (c.num_pairs() == 0)
                CHECK(real_weyl_of_levi(c, singles).size() == real_weyl_of_levi_order(c, singles));
        }
    }
}
