#pragma once

#include "svoa/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace svoa {

enum class PermGroupKind { Symmetric, Alternating, SignFlipWreath };

struct PermGroupSpec {
    PermGroupKind kind = PermGroupKind::Symmetric;
    int m = 2;
};

inline std::string kind_name(PermGroupKind k)
{
    switch (k) {
    case PermGroupKind::Symmetric: return "S";
    case PermGroupKind::Alternating: return "A";
    case PermGroupKind::SignFlipWreath: return "2^2m:(S3xSm)";
    }
    return "?";
}

namespace detail {

using i128 = __int128;

inline i128 factorial128(int n)
{
    i128 f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// Calls f(parts) for every partition of n, parts non-increasing.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            f(parts);
            return;
        }
        for (int p = std::min(left, maxp); p >= 1; --p) {
            parts.push_back(p);
            rec(left - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
}

// n! / Π i^{a_i} a_i!
inline i128 class_size(int n, const std::vector<int>& parts)
{
    std::vector<int> mult(n + 1, 0);
    for (int p : parts)
        ++mult[p];
    i128 z = 1;
    for (int i = 1; i <= n; ++i)
        for (int a = 1; a <= mult[i]; ++a)
            z *= static_cast<i128>(i) * a;
    return factorial128(n) / z;
}

inline bool is_even(int n, const std::vector<int>& parts) { return (n - static_cast<int>(parts.size())) % 2 == 0; }

// Fixed points of σ^r for σ of the given cycle type.
inline std::int64_t fix_power(const std::vector<int>& parts, int r)
{
    std::int64_t f = 0;
    for (int p : parts)
        if (r % p == 0)
            f += p;
    return f;
}

inline std::int64_t to_int64(i128 v)
{
    if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN))
        throw std::overflow_error("invariant count overflow");
    return static_cast<std::int64_t>(v);
}

} // namespace detail

// dim of invariants of S_{m+1} (or A_{m+1}) on Sym^d of the standard m-dim rep,
// by averaging the character over cycle types.
inline std::int64_t invariant_dim_sym_standard(int m, int d, PermGroupKind kind = PermGroupKind::Symmetric)
{
    if (m < 2)
        throw std::invalid_argument("m must be at least 2");
    if (kind == PermGroupKind::SignFlipWreath)
        throw std::invalid_argument("use invariant_dim_cube for the sign-flip group");
    const int n = m + 1;
    // χ_{Sym^d} = Σ_{μ ⊢ d} Π p_{μ_i} / z_μ ; keep everything integral by scaling with d!
    const detail::i128 dfact = detail::factorial128(d);
    detail::i128 total = 0;
    detail::for_each_partition(n, [&](const std::vector<int>& lam) {
        if (kind == PermGroupKind::Alternating && !detail::is_even(n, lam))
            return;
        std::vector<std::int64_t> p(d + 1, 0);
        for (int r = 1; r <= d; ++r)
            p[r] = detail::fix_power(lam, r) - 1;
        detail::i128 chi_scaled = 0;  // d! χ
        detail::for_each_partition(d, [&](const std::vector<int>& mu) {
            detail::i128 term = detail::class_size(d, mu);
            for (int part : mu)
                term *= p[part];
            chi_scaled += term;
        });
        total += detail::class_size(n, lam) * chi_scaled;
    });
    detail::i128 order = detail::factorial128(n) / (kind == PermGroupKind::Alternating ? 2 : 1);
    if (total % (order * dfact) != 0)
        throw std::logic_error("character average is not an integer");
    return detail::to_int64(total / (order * dfact));
}

inline std::int64_t invariant_dim_sym3_standard(int m, PermGroupKind kind = PermGroupKind::Symmetric)
{
    return invariant_dim_sym_standard(m, 3, kind);
}

// ---------------------------------------------------------------- m ⊗ m ⊗ m

// Sign flips (a, b, c) ∈ (Z2^m)^3 with a + b + c = 0; generators (δ_l, δ_l, 0) and (δ_l, 0, δ_l).
struct SignFlip {
    std::vector<int> a, b, c;

    int sign(int i, int j, int k) const { return ((a[i] + b[j] + c[k]) % 2) ? -1 : 1; }
};

inline std::vector<SignFlip> sign_flip_generators(int m)
{
    std::vector<SignFlip> g;
    for (int l = 0; l < m; ++l) {
        SignFlip x{std::vector<int>(m, 0), std::vector<int>(m, 0), std::vector<int>(m, 0)};
        SignFlip y = x;
        x.a[l] = x.b[l] = 1;
        y.a[l] = y.c[l] = 1;
        g.push_back(x);
        g.push_back(y);
    }
    return g;
}

// Kernel of 2^{2m} -> 2^{2(m-1)}: the constant sign vectors.
inline std::vector<SignFlip> sign_flip_kernel(int m)
{
    std::vector<int> one(m, 1), zero(m, 0);
    return {SignFlip{one, one, zero}, SignFlip{one, zero, one}, SignFlip{zero, one, one}};
}

inline bool cube_kernel_acts_trivially(int m)
{
    for (const auto& g : sign_flip_kernel(m))
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    if (g.sign(i, j, k) != 1)
                        return false;
    return true;
}

struct CubeInvariantStages {
    std::int64_t sign_fixed = 0;  // basis vectors fixed by every sign flip
    std::int64_t invariants = 0;
};

// Stage 1: the sign flips act diagonally, so their fixed space is spanned by
// fixed basis vectors. Stage 2: S_3 x S_m permutes those (here the e_iii);
// the invariant dimension is the Burnside orbit count.
inline CubeInvariantStages invariant_dim_cube_stages(int m)
{
    if (m < 2)
        throw std::invalid_argument("m must be at least 2");
    const auto gens = sign_flip_generators(m);
    std::vector<std::array<int, 3>> fixed;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                if (std::all_of(gens.begin(), gens.end(), [&](const SignFlip& g) { return g.sign(i, j, k) == 1; }))
                    fixed.push_back({i, j, k});

    // Residual action: (π, σ) sends e_{ijk} to e_{σ(i')σ(j')σ(k')} with (i',j',k') permuted by π.
    // It must preserve the fixed set; then tr(π, σ) counts fixed basis vectors.
    for (const auto& v : fixed)
        if (!(v[0] == v[1] && v[1] == v[2]))
            throw std::logic_error("sign-fixed vector outside the diagonal");
    // On e_iii the S_3 part acts trivially, and σ has fix(σ) fixed points.
    detail::i128 total = 0;
    detail::for_each_partition(m, [&](const std::vector<int>& lam) {
        total += detail::class_size(m, lam) * detail::fix_power(lam, 1);
    });
    total *= 6;
    detail::i128 order = detail::factorial128(m) * 6;
    if (total % order != 0)
        throw std::logic_error("Burnside average is not an integer");
    return {static_cast<std::int64_t>(fixed.size()), detail::to_int64(total / order)};
}

inline std::int64_t invariant_dim_cube(int m) { return invariant_dim_cube_stages(m).invariants; }

// ---------------------------------------------------------------- brute-force oracles

namespace detail {

using RMat = std::vector<std::vector<Rational>>;

// Basis of {x : A x = 0} restricted to the column span of W, returned as new W.
inline RMat common_kernel(const RMat& a, const RMat& w)
{
    // B = A W (rows of A times columns of W); W stored as columns list.
    const std::size_t cols = w.size();
    if (cols == 0)
        return {};
    const std::size_t dim = w[0].size();
    RMat b(a.size(), std::vector<Rational>(cols, Rational(0)));
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            Rational s = 0;
            for (std::size_t k = 0; k < dim; ++k)
                if (a[r][k] != Rational(0) && w[c][k] != Rational(0))
                    s += a[r][k] * w[c][k];
            b[r][c] = s;
        }
    // reduced row echelon form of B
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < b.size(); ++c) {
        std::size_t p = row;
        while (p < b.size() && b[p][c] == Rational(0))
            ++p;
        if (p == b.size())
            continue;
        std::swap(b[p], b[row]);
        Rational inv = Rational(1) / b[row][c];
        for (auto& x : b[row])
            x *= inv;
        for (std::size_t r = 0; r < b.size(); ++r)
            if (r != row && b[r][c] != Rational(0)) {
                Rational f = b[r][c];
                for (std::size_t k = c; k < cols; ++k)
                    b[r][k] -= f * b[row][k];
            }
        pivot_col.push_back(static_cast<int>(c));
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col)
        is_pivot[c] = true;
    RMat out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> coef(cols, Rational(0));
        coef[f] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            coef[pivot_col[r]] = -b[r][f];
        std::vector<Rational> v(dim, Rational(0));
        for (std::size_t c = 0; c < cols; ++c)
            if (coef[c] != Rational(0))
                for (std::size_t k = 0; k < dim; ++k)
                    v[k] += coef[c] * w[c][k];
        out.push_back(v);
    }
    return out;
}

} // namespace detail

// Σ_g tr Sym^3(g) / |G| with explicit matrices for every group element.
inline std::int64_t invariant_dim_sym3_bruteforce(int m, PermGroupKind kind = PermGroupKind::Symmetric)
{
    if (m < 2 || m > 7)
        throw std::invalid_argument("brute force supports 2 <= m <= 7");
    const int n = m + 1;
    // standard rep on basis f_i = e_i - e_n, i < n
    std::vector<std::array<int, 3>> monos;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            for (int k = j; k < m; ++k)
                monos.push_back({i, j, k});
    auto mono_index = [&](std::array<int, 3> t) {
        std::sort(t.begin(), t.end());
        return static_cast<std::size_t>(std::lower_bound(monos.begin(), monos.end(), t) - monos.begin());
    };
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t trace_sum = 0, order = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        if (kind == PermGroupKind::Alternating && inversions % 2)
            continue;
        ++order;
        // image of f_i in the f basis: e_{π(i)} - e_{π(n-1)}
        std::vector<std::vector<int>> img(m, std::vector<int>(m, 0));
        for (int i = 0; i < m; ++i) {
            auto add = [&](int e, int s) {
                if (e != n - 1)  // e_a - e_b = f_a - f_b with f_n = 0
                    img[i][e] += s;
            };
            add(perm[i], 1);
            add(perm[n - 1], -1);
        }
        // diagonal entries of Sym^3 on monomials f_i f_j f_k
        for (std::size_t r = 0; r < monos.size(); ++r) {
            auto [i, j, k] = monos[r];
            std::int64_t coeff = 0;
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    for (int c = 0; c < m; ++c) {
                        std::int64_t v = static_cast<std::int64_t>(img[i][a]) * img[j][b] * img[k][c];
                        if (v != 0 && mono_index({a, b, c}) == r)
                            coeff += v;
                    }
            trace_sum += coeff;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (trace_sum % order != 0)
        throw std::logic_error("brute-force average is not an integer");
    return trace_sum / order;
}

// Common fixed space of explicit generator matrices of 2^{2m}:(S_3 x S_m) on m⊗m⊗m.
inline std::int64_t invariant_dim_cube_bruteforce(int m)
{
    if (m < 2 || m > 6)
        throw std::invalid_argument("brute force supports 2 <= m <= 6");
    const int dim = m * m * m;
    auto idx = [m](int i, int j, int k) { return (i * m + j) * m + k; };
    using detail::RMat;
    std::vector<RMat> gens;  // each as g - I
    auto from_map = [&](const std::function<std::pair<int, int>(int, int, int)>& f) {
        RMat g(dim, std::vector<Rational>(dim, Rational(0)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) {
                    auto [to, s] = f(i, j, k);
                    g[to][idx(i, j, k)] += Rational(s);
                }
        for (int d = 0; d < dim; ++d)
            g[d][d] -= Rational(1);
        gens.push_back(g);
    };
    for (const auto& sf : sign_flip_generators(m))
        from_map([&](int i, int j, int k) { return std::make_pair(idx(i, j, k), sf.sign(i, j, k)); });
    std::vector<int> swap01(m), cycle(m);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    for (int i = 0; i < m; ++i)
        cycle[i] = (i + 1) % m;
    for (const auto& s : {swap01, cycle})
        from_map([&](int i, int j, int k) { return std::make_pair(idx(s[i], s[j], s[k]), 1); });
    from_map([&](int i, int j, int k) { return std::make_pair(idx(j, i, k), 1); });
    from_map([&](int i, int j, int k) { return std::make_pair(idx(k, i, j), 1); });

    RMat w(dim, std::vector<Rational>(dim, Rational(0)));
    for (int d = 0; d < dim; ++d)
        w[d][d] = 1;
    for (const auto& g : gens)
        w = detail::common_kernel(g, w);
    return static_cast<std::int64_t>(w.size());
}

} // namespace svoa
