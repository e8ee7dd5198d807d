#include "svoa/finite_invariants.hpp"

#include <catch_amalgamated.hpp>

using namespace svoa;

TEST_CASE("sym3_examples")
{
    CHECK(invariant_dim_sym3_standard(9, PermGroupKind::Symmetric) == 1);
    CHECK(invariant_dim_sym3_standard(4, PermGroupKind::Alternating) == 1);
    CHECK(invariant_dim_sym3_bruteforce(4, PermGroupKind::Alternating) == 1);
}

TEST_CASE("sym3_unique_up_to_twenty")
{
    for (int m = 2; m <= 20; ++m)
        CHECK(invariant_dim_sym3_standard(m) == 1);
    for (int m = 3; m <= 20; ++m)
        CHECK(invariant_dim_sym3_standard(m, PermGroupKind::Alternating) == 1);
}

TEST_CASE("sym3_a3_on_the_plane")
{
    // A_3 = Z3 rotating the plane fixes z³ and z̄³
    CHECK(invariant_dim_sym3_standard(2, PermGroupKind::Alternating) == 2);
    CHECK(invariant_dim_sym3_bruteforce(2, PermGroupKind::Alternating) == 2);
}

TEST_CASE("other_degrees_match_power_sum_counts")
{
    // invariants of S_{m+1} on Sym^d(standard) are spanned by products of p_2..p_{m+1}
    for (int m = 2; m <= 12; ++m) {
        CHECK(invariant_dim_sym_standard(m, 1) == 0);
        CHECK(invariant_dim_sym_standard(m, 2) == 1);
        CHECK(invariant_dim_sym_standard(m, 4) == (m >= 3 ? 2 : 1));  // p4, p2²
        CHECK(invariant_dim_sym_standard(m, 6) == (m >= 5 ? 4 : m == 4 ? 3 : m == 3 ? 3 : 2));
    }
}

TEST_CASE("sym3_bruteforce_agrees")
{
    for (int m = 2; m <= 6; ++m) {
        CHECK(invariant_dim_sym3_bruteforce(m) == invariant_dim_sym3_standard(m));
        CHECK(invariant_dim_sym3_bruteforce(m, PermGroupKind::Alternating) ==
              invariant_dim_sym3_standard(m, PermGroupKind::Alternating));
    }
}

TEST_CASE("cube_examples")
{
    CHECK(invariant_dim_cube(3) == 1);
    CHECK(invariant_dim_cube(8) == 1);
    for (int m = 2; m <= 12; ++m) {
        auto st = invariant_dim_cube_stages(m);
        CHECK(st.sign_fixed == m);
        CHECK(st.invariants == 1);
    }
}

TEST_CASE("cube_kernel_is_trivial")
{
    for (int m = 2; m <= 12; ++m)
        CHECK(cube_kernel_acts_trivially(m));
    // and it really is in the group: a + b + c = 0
    for (const auto& g : sign_flip_kernel(5))
        for (int i = 0; i < 5; ++i)
            CHECK((g.a[i] + g.b[i] + g.c[i]) % 2 == 0);
}

TEST_CASE("cube_bruteforce_agrees")
{
    for (int m = 2; m <= 6; ++m)
        CHECK(invariant_dim_cube_bruteforce(m) == invariant_dim_cube(m));
}

TEST_CASE("invariant_errors")
{
    CHECK_THROWS_AS(invariant_dim_sym3_standard(1), std::invalid_argument);
    CHECK_THROWS_AS(invariant_dim_cube(1), std::invalid_argument);
    CHECK_THROWS_AS(invariant_dim_sym3_bruteforce(9), std::invalid_argument);
    CHECK_THROWS_AS(invariant_dim_cube_bruteforce(7), std::invalid_argument);
    CHECK_THROWS_AS(invariant_dim_sym_standard(4, 3, PermGroupKind::SignFlipWreath), std::invalid_argument);
}
