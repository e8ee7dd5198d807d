#include "svoa/lie_core.hpp"

#include <catch_amalgamated.hpp>

using namespace svoa;

namespace {

struct TypeRank {
    LieType t;
    int n;
};

const std::vector<TypeRank> sample{{LieType::A, 1}, {LieType::A, 5}, {LieType::B, 2},  {LieType::B, 6},
                                   {LieType::C, 3}, {LieType::C, 6}, {LieType::D, 4},  {LieType::D, 12},
                                   {LieType::E6, 6}, {LieType::E7, 7}, {LieType::E8, 8}, {LieType::F4, 4},
                                   {LieType::G2, 2}};

} // namespace

TEST_CASE("positive_root_count_matches_dimension")
{
    for (auto [t, n] : sample) {
        auto rs = root_system(t, n);
        CHECK(2 * rs->num_positive_roots() + n == lie_dim(t, n));
    }
}

TEST_CASE("highest_root_has_length_two_and_level_two")
{
    for (auto [t, n] : sample) {
        auto rs = root_system(t, n);
        CHECK(rs->inner(rs->theta, rs->theta) == Rational(2));
        CHECK(rs->level_of(rs->theta) == 2);
    }
}

TEST_CASE("dual_coxeter_is_one_plus_comark_sum")
{
    for (auto [t, n] : sample) {
        auto rs = root_system(t, n);
        int s = 1;
        for (int c : rs->comarks)
            s += c;
        CHECK(s == dual_coxeter(t, n));
        CHECK(rs->dual_coxeter == dual_coxeter(t, n));
    }
}

TEST_CASE("rho_norm_freudenthal_de_vries")
{
    // (ρ,ρ) = h∨ dim g / 12 with long roots of length² 2
    for (auto [t, n] : sample) {
        auto rs = root_system(t, n);
        CHECK(rs->inner(rs->rho, rs->rho) == Rational(dual_coxeter(t, n) * lie_dim(t, n), 12));
    }
}

TEST_CASE("cartan_matrix_of_a2_and_g2")
{
    CHECK(root_system(LieType::A, 2)->cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    auto g2 = root_system(LieType::G2, 2)->cartan;
    CHECK(g2[0][1] * g2[1][0] == 3);
}

TEST_CASE("center_groups")
{
    CHECK(root_system(LieType::A, 11)->center.size() == 12);
    CHECK(root_system(LieType::D, 6)->center.name == "Z2xZ2");
    CHECK(root_system(LieType::D, 5)->center.name == "Z4");
    CHECK(root_system(LieType::E6, 6)->center.size() == 3);
    CHECK(root_system(LieType::E7, 7)->center.size() == 2);
    CHECK(root_system(LieType::E8, 8)->center.size() == 1);
    auto d6 = root_system(LieType::D, 6);
    int v = d6->center.index_of("v"), sp = d6->center.index_of("s+"), sm = d6->center.index_of("s-");
    CHECK(d6->center.add[sp][sm] == v);
    CHECK(d6->center.add[sp][sp] == 0);
    auto d5 = root_system(LieType::D, 5);
    CHECK(d5->center.order[d5->center.index_of("s+")] == 4);
    CHECK_THROWS_AS(d6->center.index_of("w"), std::invalid_argument);
}

TEST_CASE("center_nodes_are_cominuscule")
{
    for (auto [t, n] : sample) {
        auto rs = root_system(t, n);
        for (const auto& a : center_elements(rs))
            if (!a.trivial())
                CHECK(rs->comarks[a.node() - 1] == 1);
    }
}

TEST_CASE("parse_and_validate_types")
{
    CHECK(parse_type("D") == LieType::D);
    CHECK(parse_type("E", 7) == LieType::E7);
    CHECK(parse_type("E6") == LieType::E6);
    CHECK_THROWS_AS(parse_type("Q"), std::invalid_argument);
    CHECK_FALSE(valid_rank(LieType::D, 2));
    CHECK_FALSE(valid_rank(LieType::E7, 6));
    CHECK_THROWS_AS(root_system(LieType::B, 1), std::invalid_argument);
}

TEST_CASE("factor_names")
{
    CHECK(factor_name(WZWFactor{LieType::C, 3, 1}) == "Sp(2x3)_1");
    CHECK(factor_name(WZWFactor{LieType::A, 1, 2}) == "Sp(2x1)_2");
    CHECK(factor_name(WZWFactor{LieType::D, 12, 1}) == "Spin(24)_1");
    CHECK(factor_name(WZWFactor{LieType::B, 4, 3}) == "Spin(9)_3");
    CHECK(factor_name(WZWFactor{LieType::E7, 7, 2}) == "E7_2");
}

TEST_CASE("low_rank_canonical_forms")
{
    auto b1 = canonicalize(WZWFactor{LieType::B, 1, 3});
    REQUIRE(b1.factors.size() == 1);
    CHECK(b1.factors[0] == WZWFactor{LieType::A, 1, 6});
    auto d2 = canonicalize(WZWFactor{LieType::D, 2, 1});
    CHECK(d2.factors.size() == 2);
    CHECK(canonicalize(WZWFactor{LieType::D, 3, 2}).factors[0] == WZWFactor{LieType::A, 3, 2});
    CHECK(canonicalize(WZWFactor{LieType::B, 2, 1}).factors[0] == WZWFactor{LieType::C, 2, 1});
    CHECK(canonicalize(WZWFactor{LieType::D, 4, 1}).triality);
    CHECK(canonicalize_center_label(WZWFactor{LieType::D, 2, 1}, "v") == std::vector<std::string>{"1", "1"});
}

TEST_CASE("canonical_center_index_identifies_diagram_images")
{
    auto a5 = root_system(LieType::A, 5);
    CHECK(canonical_center_index(*a5, 5) == 1);
    CHECK(canonical_center_index(*a5, 3) == 3);
    auto d6 = root_system(LieType::D, 6);
    CHECK(canonical_center_index(*d6, d6->center.index_of("s-")) == d6->center.index_of("s+"));
    auto d4 = root_system(LieType::D, 4);
    CHECK(canonical_center_index(*d4, d4->center.index_of("s+")) == canonical_center_index(*d4, d4->center.index_of("v")));
}

TEST_CASE("current_weight_errors")
{
    auto rs = root_system(LieType::C, 3);
    CHECK_THROWS_AS(current_weight(CenterElement{rs, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(current_weight(CenterElement{rs, 1}, 0), std::invalid_argument);
    CHECK(current_weight(CenterElement{rs, 1}, 2).coords == IVec{0, 0, 2});
}
