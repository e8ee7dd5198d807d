#pragma once

#include "svoa/lie_core.hpp"
#include "svoa/rational.hpp"
#include "svoa/weyl_reps.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace svoa {

inline Rational conformal_dim_of_weight(const RootSystem& rs, const IVec& lambda, int k)
{
    IVec l2r = lambda;
    for (int& c : l2r)
        c = 2 * c + 2;
    for (int i = 0; i < rs.rank; ++i)
        l2r[i] -= lambda[i];  // λ + 2ρ
    return rs.inner(lambda, l2r) / Rational(2 * (k + rs.dual_coxeter));
}

inline Rational conformal_dim(const CenterElement& a, int k)
{
    if (a.trivial())
        return 0;
    return conformal_dim_of_weight(*a.rs, current_weight(a, k).coords, k);
}

// Closed forms for h_a, kept independent of the weight-lattice computation.
inline Rational closed_form_dim(const CenterElement& a, int k)
{
    const RootSystem& rs = *a.rs;
    const std::string& l = a.label();
    if (rs.center.size() == 1)
        throw std::invalid_argument("closed_form_dim: " + rs.name() + " has trivial center");
    if (a.trivial())
        return 0;
    const int n = rs.rank;
    switch (rs.type) {
    case LieType::A: {
        const int m = n + 1, i = a.index;
        return Rational(static_cast<std::int64_t>(k) * i * (m - i), 2 * m);
    }
    case LieType::B: return Rational(k, 2);
    case LieType::C: return Rational(static_cast<std::int64_t>(n) * k, 4);
    case LieType::D:
        if (l == "v")
            return Rational(k, 2);
        return Rational(static_cast<std::int64_t>(k) * 2 * n, 16);
    case LieType::E6: return Rational(2 * k, 3);
    case LieType::E7: return Rational(3 * k, 4);
    default: throw std::invalid_argument("closed_form_dim: no closed form");
    }
}

inline Rational sugawara_c(const WZWFactor& f)
{
    return Rational(static_cast<std::int64_t>(f.level) * lie_dim(f.type, f.rank), f.level + dual_coxeter(f.type, f.rank));
}

inline Rational sugawara_c(const std::vector<WZWFactor>& fs)
{
    Rational c = 0;
    for (const auto& f : fs)
        c += sugawara_c(f);
    return c;
}

inline Rational modular_anomaly(const Rational& h, const Rational& c) { return h - c / Rational(24); }

// ---------------------------------------------------------------- currents

// The per-factor piece of a current: a center element, or the E8 level-2
// exceptional current (highest weight ω_1, the 3875).
struct FactorCurrent {
    WZWFactor factor;
    int center_index = 0;
    bool exceptional = false;

    RootSystemPtr root_system() const { return factor.root_system(); }
    bool trivial() const { return !exceptional && center_index == 0; }

    CenterElement element() const { return CenterElement{root_system(), center_index}; }

    std::string label() const { return exceptional ? "3875" : element().label(); }

    IVec weight() const
    {
        auto rs = root_system();
        if (exceptional)
            return rs->fundamental(1);
        if (center_index == 0)
            return IVec(rs->rank, 0);
        return current_weight(element(), factor.level).coords;
    }

    Rational h() const { return conformal_dim_of_weight(*root_system(), weight(), factor.level); }
};

inline FactorCurrent e8_exceptional_current() { return FactorCurrent{WZWFactor{LieType::E8, 8, 2}, 0, true}; }

struct CurrentLabel {
    std::vector<FactorCurrent> parts;

    Rational h() const
    {
        Rational s = 0;
        for (const auto& p : parts)
            s += p.h();
        return s;
    }

    std::vector<WZWFactor> factors() const
    {
        std::vector<WZWFactor> f;
        for (const auto& p : parts)
            f.push_back(p.factor);
        return f;
    }

    std::vector<IVec> weights() const
    {
        std::vector<IVec> w;
        for (const auto& p : parts)
            w.push_back(p.weight());
        return w;
    }

    std::int64_t dim() const
    {
        std::int64_t d = 1;
        for (const auto& p : parts)
            d *= weyl_dim(*p.root_system(), p.weight());
        return d;
    }

    int order() const
    {
        int o = 1;
        for (const auto& p : parts) {
            if (p.exceptional)
                return 2;
            o = std::lcm(o, p.element().order());
        }
        return o;
    }

    friend bool operator==(const CurrentLabel& a, const CurrentLabel& b)
    {
        if (a.parts.size() != b.parts.size())
            return false;
        for (std::size_t i = 0; i < a.parts.size(); ++i)
            if (!(a.parts[i].factor == b.parts[i].factor) || a.parts[i].center_index != b.parts[i].center_index ||
                a.parts[i].exceptional != b.parts[i].exceptional)
                return false;
        return true;
    }
};

inline CurrentLabel add_currents(const CurrentLabel& a, const CurrentLabel& b)
{
    if (a.parts.size() != b.parts.size())
        throw std::invalid_argument("adding currents of different products");
    CurrentLabel out;
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        const auto& x = a.parts[i];
        const auto& y = b.parts[i];
        if (!(x.factor == y.factor) || x.exceptional || y.exceptional)
            throw std::invalid_argument("adding currents of different products");
        auto rs = x.root_system();
        out.parts.push_back(FactorCurrent{x.factor, rs->center.add[x.center_index][y.center_index], false});
    }
    return out;
}

inline Rational quadratic_form(const CurrentLabel& a) { return a.h().mod1(); }

inline bool extension_admissible(const std::vector<CurrentLabel>& subgroup)
{
    for (const auto& a : subgroup)
        for (const auto& b : subgroup) {
            CurrentLabel s = add_currents(a, b);
            bool found = false;
            for (const auto& c : subgroup)
                found = found || c == s;
            if (!found)
                throw std::invalid_argument("current subgroup is not closed under fusion");
        }
    const Rational half(1, 2);
    for (const auto& a : subgroup) {
        Rational q = quadratic_form(a);
        if (q != Rational(0) && q != half)
            return false;
        for (const auto& b : subgroup)
            if (quadratic_form(add_currents(a, b)) != (q + quadratic_form(b)).mod1())
                return false;
    }
    return true;
}

// ---------------------------------------------------------------- simple currents on anyons

// J_a·λ = k ω_a + w_a(λ), with w_a = w_0^{(a)} w_0: send λ to the antidominant
// chamber, then back to dominant using only the reflections fixing ω_a.
inline IVec simple_current_action(const CenterElement& a, int k, const IVec& lambda)
{
    const RootSystem& rs = *a.rs;
    if (a.trivial())
        return lambda;
    IVec w = lambda;
    for (int& c : w)
        c = -c;
    reflect_to_dominant(rs, w);
    for (int& c : w)
        c = -c;
    const int node = a.node() - 1;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i < rs.rank; ++i)
            if (i != node && w[i] < 0) {
                int c = w[i];
                for (int j = 0; j < rs.rank; ++j)
                    w[j] -= c * rs.simple_roots[i][j];
                moved = true;
            }
    }
    w[node] += k;
    return w;
}

// Monodromy charge h_a + h_λ − h_{J_a λ} mod 1, which equals −(λ, ω_a) mod 1.
inline Rational monodromy_charge(const CenterElement& a, const IVec& lambda)
{
    if (a.trivial())
        return 0;
    return (-a.rs->inner(lambda, a.rs->fundamental(a.node()))).mod1();
}

// ---------------------------------------------------------------- graded dimensions

inline constexpr int max_affine_depth = 8;

struct GradedDims {
    Rational h;
    std::vector<std::int64_t> dims;
};

inline GradedDims affine_graded_dims(const WZWFactor& f, const IVec& lambda, int depth = 4,
                                     RepCache& cache = thread_cache())
{
    if (depth < 0 || depth > max_affine_depth)
        throw std::invalid_argument("affine depth must lie in [0, " + std::to_string(max_affine_depth) + "]");
    auto rs = f.root_system();
    for (int c : lambda)
        if (c < 0)
            throw std::invalid_argument("affine_graded_dims needs a dominant weight");
    if (rs->level_of(lambda) > f.level)
        throw std::invalid_argument("weight is not integrable at level " + std::to_string(f.level));
    GradedDims g{conformal_dim_of_weight(*rs, lambda, f.level), {}};
    auto& mod = cache.module(rs, lambda, f.level);
    for (int d = 0; d <= depth; ++d)
        g.dims.push_back(mod.slice_dim(d));
    return g;
}

} // namespace svoa
