#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orbitft/rootdata.hpp>

#include <algorithm>
#include <set>

using namespace orbitft;

TEST_CASE("cartan slot model splits into conjugate pairs and real slots") {
    CartanModel c = make_cartan(5, 1);
    CHECK(c.m() == 2);
    CHECK(c.delta() == 1);
    CHECK(c.num_pairs() == 1);
    CHECK(c.num_reals() == 3);
    CHECK(c.pairs() == std::vector<std::pair<int, int>>{{2, 3}});
    CHECK(c.real_slots() == std::vector<int>{0, 1, 4});
    CHECK(c.is_real_slot(0));
    CHECK(c.is_real_slot(4));
    CHECK(!c.is_real_slot(2));
    CHECK(c.pair_index_of(2) == 0);
    CHECK(c.pair_index_of(3) == 0);
    CHECK(c.pair_index_of(0) == -1);
    CHECK(c.conjugate_slot(2) == 3);
    CHECK(c.conjugate_slot(3) == 2);
    CHECK(c.conjugate_slot(0) == 0);

    CartanModel fund = make_cartan(4, 0);
    CHECK(fund.pairs() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK(fund.real_slots().empty());
    CartanModel split = make_cartan(4, 2);
    CHECK(split.pairs().empty());
    CHECK(split.real_slots() == std::vector<int>{0, 1, 2, 3});

    CHECK_THROWS_AS(make_cartan(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_cartan(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_cartan(4, -1), std::invalid_argument);
}

TEST_CASE("cayley neighbor opens exactly one pair") {
    CartanModel c = make_cartan(4, 0);
    CartanModel d = cayley_neighbor(c);
    CHECK(d.n == 4);
    CHECK(d.l == 1);
    CHECK(cayley_neighbor(d).l == 2);
    CHECK_THROWS(cayley_neighbor(make_cartan(4, 2)));
}

TEST_CASE("roots classify by the slot types of their endpoints") {
    CartanModel c = make_cartan(4, 1);
    CHECK(classify_root(c, {0, 1}) == RootType::Real);
    CHECK(classify_root(c, {2, 3}) == RootType::Imaginary);
    CHECK(classify_root(c, {3, 2}) == RootType::Imaginary);
    CHECK(classify_root(c, {0, 2}) == RootType::Complex);
    CHECK(conjugate_root(c, {0, 2}) == Root{0, 3});
    CHECK(conjugate_root(c, {2, 3}) == Root{3, 2});
    CHECK(conjugate_root(c, {0, 1}) == Root{0, 1});

    std::vector<Root> roots = all_roots(4);
    CHECK(roots.size() == 12);
    CHECK(std::is_sorted(roots.begin(), roots.end()));
}

TEST_CASE("component enumeration counts real orders times pair signs") {
    // n = 4: l = 0 has no reals and two pairs, l = 1 one pair and two reals
    CHECK(enumerate_components(make_cartan(4, 0), ComponentLevel::Orders).size() == 1);
    CHECK(enumerate_components(make_cartan(4, 0), ComponentLevel::OrdersAndSigns).size() == 4);
    CHECK(enumerate_components(make_cartan(4, 1), ComponentLevel::Orders).size() == 2);
    CHECK(enumerate_components(make_cartan(4, 1), ComponentLevel::OrdersAndSigns).size() == 4);
    CHECK(enumerate_components(make_cartan(4, 2), ComponentLevel::Orders).size() == 24);
    CHECK(enumerate_components(make_cartan(4, 2), ComponentLevel::OrdersAndSigns).size() == 24);
    CHECK(enumerate_components(make_cartan(5, 1), ComponentLevel::OrdersAndSigns).size() == 12);

    for (int n = 1; n <= 4; ++n) {
        for (int l = 0; l <= n / 2; ++l) {
            auto comps = enumerate_components(make_cartan(n, l), ComponentLevel::OrdersAndSigns);
            std::set<Component> dedup(comps.begin(), comps.end());
            CHECK(dedup.size() == comps.size());
            CHECK(dedup.count(canonical_component(make_cartan(n, l))) == 1);
        }
    }
}

TEST_CASE("the canonical component is the ascending order with positive signs") {
    Component comp = canonical_component(make_cartan(5, 1));
    CHECK(comp.real_order == std::vector<int>{0, 1, 4});
    CHECK(comp.pair_signs == std::vector<int>{1});
    CHECK(transport_perm(comp).is_identity());
}

static bool roots_compose(const Root& a, const Root& b, Root* sum) {
    if (a.q == b.p && a.p != b.q) {
        *sum = {a.p, b.q};
        return true;
    }
    if (b.q == a.p && b.p != a.q) {
        *sum = {b.p, a.q};
        return true;
    }
    return false;
}

TEST_CASE("every component carries a valid positive system") {
    for (int n = 1; n <= 4; ++n) {
        for (int l = 0; l <= n / 2; ++l) {
            CartanModel c = make_cartan(n, l);
            for (const Component& comp : enumerate_components(c, ComponentLevel::OrdersAndSigns)) {
                for (int scheme = 0; scheme < 2; ++scheme) {
                    PositiveSystem ps = canonical_positive_system(comp, scheme);
                    CHECK(static_cast<int>(ps.positives.size()) == n * (n - 1) / 2);
                    for (const Root& r : all_roots(n))
                        CHECK(is_positive(ps, r) != is_positive(ps, negate_root(r)));
                    // closure under root addition
                    Root sum;
                    for (const Root& a : ps.positives)
                        for (const Root& b : ps.positives)
                            if (roots_compose(a, b, &sum)) CHECK(is_positive(ps, sum));
                    // complex positives are conjugation stable; an imaginary
                    // root conjugates to its own negative
                    for (const Root& a : ps.positives) {
                        if (classify_root(c, a) == RootType::Complex)
                            CHECK(is_positive(ps, conjugate_root(c, a)));
                        if (classify_root(c, a) == RootType::Imaginary)
                            CHECK(conjugate_root(c, a) == negate_root(a));
                    }
                    // real positives follow the component order
                    const auto& ord = comp.real_order;
                    for (size_t i = 0; i < ord.size(); ++i)
                        for (size_t j = i + 1; j < ord.size(); ++j)
                            CHECK(is_positive(ps, Root{ord[i], ord[j]}));
                    // imaginary positives follow the pair signs
                    for (const auto& [a, b] : c.pairs()) {
                        int s = comp.pair_signs[c.pair_index_of(a)];
                        CHECK(is_positive(ps, s > 0 ? Root{a, b} : Root{b, a}));
                    }
                }
            }
        }
    }
}

TEST_CASE("both witness schemes cut out the same chamber") {
    for (int n = 1; n <= 5; ++n)
        for (int l = 0; l <= n / 2; ++l)
            for (const Component& comp :
                 enumerate_components(make_cartan(n, l), ComponentLevel::OrdersAndSigns))
                CHECK(canonical_positive_system(comp, 0).positives ==
                      canonical_positive_system(comp, 1).positives);
}

TEST_CASE("the transport permutation carries the canonical chamber onto each component") {
    for (int n = 1; n <= 4; ++n) {
        for (int l = 0; l <= n / 2; ++l) {
            CartanModel c = make_cartan(n, l);
            PositiveSystem can = canonical_positive_system(canonical_component(c));
            for (const Component& comp : enumerate_components(c, ComponentLevel::OrdersAndSigns)) {
                PositiveSystem ps = canonical_positive_system(comp);
                Perm u = transport_perm(comp);
                std::vector<Root> image;
                for (const Root& r : can.positives) image.push_back({u(r.p), u(r.q)});
                std::sort(image.begin(), image.end());
                // sign_u = +1: the image is the positive system itself, never a
                // mix needing orientation flips
                CHECK(image == ps.positives);
            }
        }
    }
}

TEST_CASE("positive real and imaginary roots split off correctly") {
    Component comp = canonical_component(make_cartan(4, 1));
    PositiveSystem ps = canonical_positive_system(comp);
    CHECK(positive_real_roots(ps) == std::vector<Root>{{0, 1}});
    CHECK(positive_imaginary_roots(ps) == std::vector<Root>{{2, 3}});

    Component flipped = comp;
    flipped.pair_signs = {-1};
    PositiveSystem psf = canonical_positive_system(flipped);
    CHECK(positive_imaginary_roots(psf) == std::vector<Root>{{3, 2}});
}

TEST_CASE("the sign against the standard order counts inverted positives") {
    Component comp = canonical_component(make_cartan(2, 1));
    CHECK(sign_versus_standard_order(canonical_positive_system(comp)) == 1);
    Component swapped = comp;
    swapped.real_order = {1, 0};
    CHECK(sign_versus_standard_order(canonical_positive_system(swapped)) == -1);
}
