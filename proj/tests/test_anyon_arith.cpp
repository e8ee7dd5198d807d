#include "svoa/anyon_arith.hpp"

#include <catch_amalgamated.hpp>

using namespace svoa;

namespace {

// Σ_n q^{n²} / Π(1-q^k): vacuum of the √2Z lattice, i.e. Sp(2x1)_1.
std::vector<std::int64_t> lattice_a1_vacuum(int depth)
{
    std::vector<std::int64_t> theta(depth + 1, 0), out(depth + 1, 0), part(depth + 1, 0);
    for (int n = -depth; n <= depth; ++n)
        if (n * n <= depth)
            ++theta[n * n];
    part[0] = 1;
    for (int k = 1; k <= depth; ++k)
        for (int i = k; i <= depth; ++i)
            part[i] += part[i - k];
    for (int i = 0; i <= depth; ++i)
        for (int j = 0; i + j <= depth; ++j)
            out[i + j] += theta[i] * part[j];
    return out;
}

// E4 / η^8 without the q^{-1/3}: vacuum of E8_1.
std::vector<std::int64_t> e8_level1_vacuum(int depth)
{
    std::vector<std::int64_t> e4(depth + 1, 0), out(depth + 1, 0), inv(depth + 1, 0);
    e4[0] = 1;
    for (int n = 1; n <= depth; ++n) {
        std::int64_t s = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0)
                s += static_cast<std::int64_t>(d) * d * d;
        e4[n] = 240 * s;
    }
    // Π (1-q^k)^{-8}
    inv[0] = 1;
    for (int k = 1; k <= depth; ++k)
        for (int rep = 0; rep < 8; ++rep)
            for (int i = k; i <= depth; ++i)
                inv[i] += inv[i - k];
    for (int i = 0; i <= depth; ++i)
        for (int j = 0; i + j <= depth; ++j)
            out[i + j] += e4[i] * inv[j];
    return out;
}

} // namespace

TEST_CASE("closed_form_dims_agree_with_weight_formula")
{
    for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D, LieType::E6, LieType::E7})
        for (int n = 1; n <= 8; ++n) {
            if (!valid_rank(t, n))
                continue;
            auto rs = root_system(t, n);
            for (int k = 1; k <= 4; ++k)
                for (const auto& a : center_elements(rs))
                    CHECK(conformal_dim(a, k) == closed_form_dim(a, k));
        }
}

TEST_CASE("spin24_level2_currents")
{
    auto rs = root_system(LieType::D, 12);
    CHECK(conformal_dim(center_element(rs, "v"), 2) == Rational(1));
    CHECK(conformal_dim(center_element(rs, "s+"), 2) == Rational(3));
    CHECK(conformal_dim(center_element(rs, "s-"), 2) == Rational(3));
}

TEST_CASE("closed_form_needs_center")
{
    CHECK_THROWS_AS(closed_form_dim(CenterElement{root_system(LieType::E8, 8), 0}, 1), std::invalid_argument);
}

TEST_CASE("sugawara_central_charges")
{
    CHECK(sugawara_c(WZWFactor{LieType::E8, 8, 1}) == Rational(8));
    CHECK(sugawara_c(WZWFactor{LieType::E7, 7, 2}) == Rational(133, 10));
    for (int m = 5; m <= 20; ++m) {
        WZWFactor f = m % 2 ? WZWFactor{LieType::B, m / 2, 1} : WZWFactor{LieType::D, m / 2, 1};
        CHECK(sugawara_c(f) == Rational(m, 2));
    }
    CHECK(modular_anomaly(Rational(3, 2), Rational(12)) == Rational(1));
}

TEST_CASE("simple_current_orbit_returns_after_order_steps")
{
    for (auto [t, n, k] : std::vector<std::tuple<LieType, int, int>>{
             {LieType::A, 4, 2}, {LieType::C, 3, 2}, {LieType::D, 5, 1}, {LieType::D, 6, 2}, {LieType::E6, 6, 2}}) {
        auto rs = root_system(t, n);
        std::vector<IVec> weights{IVec(n, 0)};
        for (int i = 1; i <= n; ++i)
            if (rs->comarks[i - 1] <= k)
                weights.push_back(rs->fundamental(i));
        for (const auto& a : center_elements(rs))
            for (const auto& lam : weights) {
                IVec x = lam;
                for (int s = 0; s < a.order(); ++s)
                    x = simple_current_action(a, k, x);
                CHECK(x == lam);
            }
    }
}

TEST_CASE("monodromy_charge_from_conformal_dims")
{
    for (auto [t, n, k] : std::vector<std::tuple<LieType, int, int>>{
             {LieType::A, 3, 2}, {LieType::B, 4, 2}, {LieType::C, 4, 1}, {LieType::D, 4, 2}, {LieType::E7, 7, 1}}) {
        auto rs = root_system(t, n);
        std::vector<IVec> weights{IVec(n, 0)};
        for (int i = 1; i <= n; ++i)
            if (rs->comarks[i - 1] <= k)
                weights.push_back(rs->fundamental(i));
        for (const auto& a : center_elements(rs)) {
            if (a.trivial())
                continue;
            Rational ha = conformal_dim(a, k);
            for (const auto& lam : weights) {
                IVec j = simple_current_action(a, k, lam);
                Rational rhs = (ha + conformal_dim_of_weight(*rs, lam, k) - conformal_dim_of_weight(*rs, j, k)).mod1();
                CHECK(monodromy_charge(a, lam) == rhs);
            }
        }
    }
}

TEST_CASE("extension_admissibility")
{
    WZWFactor d8{LieType::D, 8, 1};
    auto rs = d8.root_system();
    CurrentLabel vac{{FactorCurrent{d8, 0, false}}};
    CurrentLabel s{{FactorCurrent{d8, rs->center.index_of("s+"), false}}};
    CHECK(extension_admissible({vac, s}));  // h = 1
    WZWFactor a2{LieType::A, 2, 1};
    CurrentLabel z0{{FactorCurrent{a2, 0, false}}}, z1{{FactorCurrent{a2, 1, false}}}, z2{{FactorCurrent{a2, 2, false}}};
    CHECK_FALSE(extension_admissible({z0, z1, z2}));  // h = 1/3
    CHECK_THROWS_AS(extension_admissible({z0, z1}), std::invalid_argument);
}

TEST_CASE("current_label_arithmetic")
{
    WZWFactor c3{LieType::C, 3, 1};
    WZWFactor d6{LieType::D, 6, 1};
    CurrentLabel cur{{FactorCurrent{c3, 1, false}, FactorCurrent{d6, 2, false}}};
    CHECK(cur.h() == Rational(3, 4) + Rational(3, 4));
    CHECK(cur.dim() == 14 * 32);
    CHECK(cur.order() == 2);
    CHECK(add_currents(cur, cur).h() == Rational(0));
    CHECK(quadratic_form(cur) == Rational(1, 2));
}

TEST_CASE("affine_vacuum_characters")
{
    auto a1 = affine_graded_dims(WZWFactor{LieType::A, 1, 1}, {0}, 8);
    CHECK(a1.dims == lattice_a1_vacuum(8));
    auto e8 = affine_graded_dims(WZWFactor{LieType::E8, 8, 1}, IVec(8, 0), 2);
    CHECK(e8.dims == e8_level1_vacuum(2));
}

TEST_CASE("affine_module_graded_dims")
{
    // Spin(8)_1 is eight free fermions: v has ψ_{-1/2} (8), then ψ_{-3/2} and three ψ_{-1/2} (8 + 56)
    WZWFactor d4{LieType::D, 4, 1};
    auto v = affine_graded_dims(d4, {1, 0, 0, 0}, 3);
    CHECK(v.h == Rational(1, 2));
    CHECK(v.dims[0] == 8);
    CHECK(v.dims[1] == 64);
    // triality permutes v, s+, s-
    CHECK(affine_graded_dims(d4, {0, 0, 1, 0}, 3).dims == v.dims);
    CHECK(affine_graded_dims(d4, {0, 0, 0, 1}, 3).dims == v.dims);
}

TEST_CASE("affine_graded_dims_errors")
{
    WZWFactor f{LieType::A, 2, 1};
    CHECK_THROWS_AS(affine_graded_dims(f, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(affine_graded_dims(f, {-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(affine_graded_dims(f, {0, 0}, max_affine_depth + 1), std::invalid_argument);
}
