#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "exgroup/families.hpp"
#include "exgroup/group.hpp"
#include "test_util.hpp"

using namespace exg;

TEST_CASE("trivial group from a 1x1 table") {
    const Group g = group_from_cayley_table({{0}});
    CHECK(g.n == 1);
    CHECK(g.identity == 0);
    CHECK(g.inv[0] == 0);
}

TEST_CASE("cyclic table of order 3") {
    const Group g = group_from_cayley_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(g.identity == 0);
    CHECK(g.mul(1, 2) == 0);
    CHECK(g.inv[1] == 2);
}

TEST_CASE("row that is not a permutation is rejected") {
    CHECK_THROWS_WITH_AS(group_from_cayley_table({{0, 1}, {1, 1}}),
                         doctest::Contains("not a permutation"), Error);
}

TEST_CASE("latin square without identity is rejected") {
    // x*y = 2x+y mod 3: rows/columns are permutations, no two-sided identity
    CHECK_THROWS_WITH_AS(group_from_cayley_table({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}),
                         doctest::Contains("identity"), Error);
}

TEST_CASE("non-associative loop of order 5 is rejected") {
    // every element is its own two-sided inverse, but (1*2)*3 != 1*(2*3)
    const std::vector<std::vector<int>> loop = {
        {0, 1, 2, 3, 4},
        {1, 0, 3, 4, 2},
        {2, 4, 0, 1, 3},
        {3, 2, 4, 0, 1},
        {4, 3, 1, 2, 0},
    };
    CHECK_THROWS_WITH_AS(group_from_cayley_table(loop), doctest::Contains("associativity"),
                         Error);
}

TEST_CASE("every family constructor yields a fully associative group") {
    // exhaustive re-check, independent of construction-time validation
    for (const Group& g : {cyclic_group(6), dihedral_group(4), elementary_abelian_group(3, 2),
                          quaternion_group(), alternating_group_4(),
                          semidirect_cyclic(8, 2, 3),
                          direct_product(cyclic_group(2), dihedral_group(4))}) {
        REQUIRE(g.n <= 64);
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                for (int c = 0; c < g.n; ++c)
                    REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
}

TEST_CASE("frobenius subgroup orders") {
    CHECK(frobenius_subgroup_of_agl(19, 6).group.n == 57);
    CHECK(frobenius_subgroup_of_agl(7, 6).group.n == 7);
    CHECK(frobenius_subgroup_of_agl(13, 6).group.n == 26);
    CHECK(frobenius_subgroup_of_agl(7, 2).group.n == 21);
    CHECK(frobenius_subgroup_of_agl(11, 2).group.n == 55);
}

TEST_CASE("frobenius parameter validation") {
    CHECK_THROWS_AS(frobenius_subgroup_of_agl(12, 6), Error); // not prime
    CHECK_THROWS_AS(frobenius_subgroup_of_agl(19, 5), Error); // 5 does not divide 18
}

TEST_CASE("frobenius group acts faithfully and transitively on the field") {
    const FrobeniusGroup fg = frobenius_subgroup_of_agl(19, 6);
    const int n = fg.group.n, p = fg.spec.p;
    // transitive: orbit of 0 is everything
    std::set<int> orbit;
    for (int g = 0; g < n; ++g) orbit.insert(fg.point_image(g, 0));
    CHECK(int(orbit.size()) == p);
    // faithful: only the identity fixes every point
    for (int g = 0; g < n; ++g) {
        bool fixes_all = true;
        for (int x = 0; x < p && fixes_all; ++x) fixes_all = fg.point_image(g, x) == x;
        CHECK(fixes_all == (g == fg.group.identity));
    }
    // action is compatible with the multiplication table
    for (int g = 0; g < n; g += 7)
        for (int h = 0; h < n; h += 5)
            for (int x = 0; x < p; ++x)
                CHECK(fg.point_image(fg.group.mul(g, h), x) == fg.point_image(g, fg.point_image(h, x)));
}

TEST_CASE("generated subgroup basics") {
    const Group c6 = cyclic_group(6);
    CHECK(generated_subgroup(c6, GroupSubset(6)).elements() == std::vector<int>{0});
    CHECK(generated_subgroup(c6, c6.subset({2})).elements() == std::vector<int>{0, 2, 4});
}

TEST_CASE("one translation generates the translation subgroup") {
    const FrobeniusGroup fg = frobenius_subgroup_of_agl(19, 6);
    // element index 1 is the map x -> x + 1 (a = 1, b = 1)
    CHECK(fg.spec.elements[1] == std::pair<int, int>{1, 1});
    const GroupSubset h = generated_subgroup(fg.group, fg.group.subset({1}));
    CHECK(h.size() == 19);
    const auto oracle = testutil::naive_closure(fg.group, {1});
    CHECK(std::vector<int>(oracle.begin(), oracle.end()) == h.elements());
}

TEST_CASE("is_subgroup") {
    const Group c4 = cyclic_group(4);
    CHECK(is_subgroup(c4, c4.subset({0})));
    CHECK(is_subgroup(c4, c4.full_subset()));
    CHECK_FALSE(is_subgroup(c4, c4.subset({0, 1})));
    CHECK_THROWS_AS(is_subgroup(c4, GroupSubset(4)), Error);
}

TEST_CASE("generated subgroups are subgroups and closing is idempotent") {
    std::mt19937 rng(7);
    for (const auto& name : {"dihedral_12", "quaternion_08", "frobenius_21"}) {
        const Group g = [&] {
            if (std::string(name) == "dihedral_12") return dihedral_group(6);
            if (std::string(name) == "quaternion_08") return quaternion_group();
            return frobenius_subgroup_of_agl(7, 2).group;
        }();
        for (int trial = 0; trial < 20; ++trial) {
            GroupSubset s(g.n);
            std::uniform_int_distribution<int> pick(0, g.n - 1);
            for (int i = 0, m = trial % 4; i <= m; ++i) s.insert(pick(rng));
            const GroupSubset h = generated_subgroup(g, s);
            CHECK(is_subgroup(g, h));
            CHECK(generated_subgroup(g, h) == h);
            CHECK(g.n % h.size() == 0); // Lagrange, as a sanity cross-check
        }
    }
}
