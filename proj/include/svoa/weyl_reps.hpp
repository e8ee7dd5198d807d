#pragma once

#include "svoa/factored.hpp"
#include "svoa/lie_core.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace svoa {

inline constexpr std::int64_t default_dim_cap = 5000;

// ---------------------------------------------------------------- Weyl group

// Reflect into the dominant chamber; returns the length parity (+1/-1).
inline int reflect_to_dominant(const RootSystem& rs, IVec& w)
{
    int sign = 1;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i < rs.rank; ++i)
            if (w[i] < 0) {
                int c = w[i];
                const IVec& a = rs.simple_roots[i];
                for (int j = 0; j < rs.rank; ++j)
                    w[j] -= c * a[j];
                sign = -sign;
                moved = true;
            }
    }
    return sign;
}

inline IVec dominant_of(const RootSystem& rs, IVec w)
{
    reflect_to_dominant(rs, w);
    return w;
}

// |W| of the Dynkin subdiagram on `nodes` (0-based), by component type.
inline Factored weyl_order_of_subdiagram(const RootSystem& rs, const std::vector<int>& nodes)
{
    Factored total;
    std::vector<char> in(rs.rank, 0), seen(rs.rank, 0);
    for (int v : nodes)
        in[v] = 1;
    for (int start : nodes) {
        if (seen[start])
            continue;
        std::vector<int> comp;
        std::deque<int> q{start};
        seen[start] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            comp.push_back(v);
            for (int u = 0; u < rs.rank; ++u)
                if (in[u] && !seen[u] && rs.cartan[v][u] != 0) {
                    seen[u] = 1;
                    q.push_back(u);
                }
        }
        const int n = static_cast<int>(comp.size());
        int max_bond = 1;
        std::vector<int> degree(rs.rank, 0);
        int double_ends_ok = 0;
        for (int a : comp)
            for (int b : comp)
                if (a < b && rs.cartan[a][b] != 0) {
                    int m = rs.cartan[a][b] * rs.cartan[b][a];
                    max_bond = std::max(max_bond, m);
                    ++degree[a];
                    ++degree[b];
                }
        for (int a : comp)
            for (int b : comp)
                if (a < b && rs.cartan[a][b] * rs.cartan[b][a] == 2 && (degree[a] == 1 || degree[b] == 1))
                    double_ends_ok = 1;
        if (max_bond == 3) {
            total.mul(12);
        } else if (max_bond == 2) {
            if (n == 4 && !double_ends_ok)
                total.mul(1152);
            else
                total.mul_factorial(n);  // B_n / C_n: 2^n n!
                for (int i = 0; i < n; ++i)
                    total.mul(2);
        } else {
            int branch = -1;
            for (int a : comp)
                if (degree[a] == 3)
                    branch = a;
            if (branch < 0) {
                total.mul_factorial(n + 1);
            } else {
                std::vector<int> arms;
                for (int b : comp) {
                    if (b == branch || rs.cartan[branch][b] == 0)
                        continue;
                    int len = 1, prev = branch, cur = b;
                    for (bool more = true; more;) {
                        more = false;
                        for (int c : comp)
                            if (c != prev && c != cur && rs.cartan[cur][c] != 0) {
                                prev = cur;
                                cur = c;
                                ++len;
                                more = true;
                                break;
                            }
                    }
                    arms.push_back(len);
                }
                std::sort(arms.begin(), arms.end());
                if (arms[0] == 1 && arms[1] == 1) {
                    total.mul_factorial(n);  // D_n: 2^(n-1) n!
                    for (int i = 0; i < n - 1; ++i)
                        total.mul(2);
                } else if (arms[2] == 2) {
                    total.mul(51840);
                } else if (arms[2] == 3) {
                    total.mul(2903040);
                } else {
                    total.mul(696729600);
                }
            }
        }
    }
    return total;
}

inline Factored weyl_group_order(const RootSystem& rs)
{
    std::vector<int> all(rs.rank);
    for (int i = 0; i < rs.rank; ++i)
        all[i] = i;
    return weyl_order_of_subdiagram(rs, all);
}

// Size of the Weyl orbit of a dominant weight: |W| / |Stab|.
inline std::int64_t orbit_size(const RootSystem& rs, const IVec& dominant)
{
    std::vector<int> zero;
    for (int i = 0; i < rs.rank; ++i)
        if (dominant[i] == 0)
            zero.push_back(i);
    return weyl_group_order(rs).div(weyl_order_of_subdiagram(rs, zero)).value();
}

inline std::vector<IVec> weyl_orbit(const RootSystem& rs, const IVec& dominant)
{
    std::set<IVec> seen{dominant};
    std::deque<IVec> q{dominant};
    while (!q.empty()) {
        IVec w = q.front();
        q.pop_front();
        for (int i = 0; i < rs.rank; ++i) {
            if (w[i] == 0)
                continue;
            IVec r = w;
            for (int j = 0; j < rs.rank; ++j)
                r[j] -= w[i] * rs.simple_roots[i][j];
            if (seen.insert(r).second)
                q.push_back(std::move(r));
        }
    }
    return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------- dimensions

inline std::int64_t weyl_dim(const RootSystem& rs, const IVec& lambda)
{
    for (int c : lambda)
        if (c < 0)
            throw std::invalid_argument("weyl_dim of a non-dominant weight");
    // (λ+ρ, α∨)/(ρ, α∨) with α∨ written through 3·|α_i|² to stay integral
    Factored f;
    for (const IVec& beta : rs.positive_roots) {
        std::int64_t num = 0, den = 0;
        for (int i = 0; i < rs.rank; ++i) {
            if (beta[i] == 0)
                continue;
            std::int64_t w = beta[i] * (rs.sym_form[i][i] * Rational(3)).num();
            num += w * (lambda[i] + 1);
            den += w;
        }
        f.mul(num).div(den);
    }
    return f.value();
}

inline std::int64_t weyl_dim(const Weight& w) { return weyl_dim(*w.rs, w.coords); }

// ---------------------------------------------------------------- Freudenthal

// Weight multiplicities of an integrable highest-weight module of the
// untwisted affinization at level k, slice by slice in depth. Only dominant
// finite weights are stored. Depth 0 is the finite irrep V(λ), for any k.
class HighestWeightModule {
public:
    HighestWeightModule(RootSystemPtr rs, IVec lambda, int level)
        : rs_(std::move(rs)), lambda_(std::move(lambda)), level_(level)
    {
        IVec lr = shifted(lambda_);
        top_norm_ = rs_->inner_scaled(lr, lr);
    }

    const RootSystemPtr& root_system() const { return rs_; }
    const IVec& highest_weight() const { return lambda_; }
    int level() const { return level_; }

    const std::map<IVec, std::int64_t>& slice(int depth)
    {
        while (static_cast<int>(slices_.size()) <= depth)
            compute_slice(static_cast<int>(slices_.size()));
        return slices_[depth];
    }

    std::int64_t mult(const IVec& w, int depth)
    {
        if (depth < 0)
            return 0;
        IVec d = dominant_of(*rs_, w);
        const auto& s = slice(depth);
        auto it = s.find(d);
        return it == s.end() ? 0 : it->second;
    }

    std::int64_t slice_dim(int depth)
    {
        std::int64_t total = 0;
        for (const auto& [w, m] : slice(depth))
            total += m * orbit_size(*rs_, w);
        return total;
    }

private:
    RootSystemPtr rs_;
    IVec lambda_;
    int level_;
    std::int64_t top_norm_ = 0;
    std::deque<std::map<IVec, std::int64_t>> slices_;  // deque keeps references stable

    IVec shifted(IVec w) const
    {
        for (int& c : w)
            c += 1;
        return w;
    }

    std::int64_t bound(int depth) const
    {
        return top_norm_ + 2 * static_cast<std::int64_t>(level_ + rs_->dual_coxeter) * depth * rs_->form_scale;
    }

    // Dominant μ in the class of λ mod the root lattice with |μ+ρ|² ≤ bound.
    std::vector<IVec> candidates(int depth) const
    {
        const RootSystem& rs = *rs_;
        const int n = rs.rank;
        const std::int64_t lim = bound(depth);
        std::vector<IVec> out;
        IVec c(n, 0);
        IVec cr = shifted(c);
        std::vector<std::int64_t> g(n, 0);  // S·(ω_i, c+ρ)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                g[i] += rs.gram_scaled[i][j] * cr[j];
        std::int64_t norm = rs.inner_scaled(cr, cr);
        // depth-first over coordinates; the norm is increasing in every label
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                IVec diff(n);
                for (int j = 0; j < n; ++j)
                    diff[j] = lambda_[j] - c[j];
                if (rs.in_root_lattice(diff))
                    out.push_back(c);
                return;
            }
            rec(i + 1);
            int added = 0;
            while (true) {
                std::int64_t next = norm + 2 * g[i] + rs.gram_scaled[i][i];
                if (next > lim)
                    break;
                norm = next;
                for (int j = 0; j < n; ++j)
                    g[j] += rs.gram_scaled[j][i];
                ++c[i];
                ++added;
                rec(i + 1);
            }
            for (int t = 0; t < added; ++t) {
                for (int j = 0; j < n; ++j)
                    g[j] -= rs.gram_scaled[j][i];
                --c[i];
                norm -= 2 * g[i] + rs.gram_scaled[i][i];
            }
        };
        rec(0);
        std::vector<std::pair<std::int64_t, IVec>> keyed;
        for (auto& w : out) {
            IVec wr = shifted(w);
            keyed.emplace_back(rs.inner_scaled(wr, wr), w);
        }
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second > b.second;
        });
        std::vector<IVec> res;
        for (auto& kv : keyed)
            res.push_back(std::move(kv.second));
        return res;
    }

    void compute_slice(int depth)
    {
        const RootSystem& rs = *rs_;
        const int n = rs.rank;
        const std::int64_t S = rs.form_scale;
        const std::int64_t k = level_;
        slices_.emplace_back();
        auto& cur = slices_.back();
        for (const IVec& mu : candidates(depth)) {
            if (depth == 0 && mu == lambda_) {
                cur[mu] = 1;
                continue;
            }
            IVec mr = shifted(mu);
            std::int64_t denom = top_norm_ - rs.inner_scaled(mr, mr) + 2 * (k + rs.dual_coxeter) * depth * S;
            std::int64_t rhs = 0;
            const std::int64_t lim = bound(depth);
            const std::int64_t mnorm = rs.inner_scaled(mr, mr);
            IVec w(n);
            for (std::size_t r = 0; r < rs.positive_root_labels.size(); ++r) {
                const IVec& a = rs.positive_root_labels[r];
                const std::int64_t aa = rs.inner_scaled(a, a);
                const std::int64_t mua = rs.inner_scaled(mu, a);
                const std::int64_t mra = rs.inner_scaled(mr, a);
                // n = 0, ᾱ > 0: same depth, norm of μ+ρ+jα increases with j
                for (int j = 1;; ++j) {
                    std::int64_t nn = mnorm + 2 * j * mra + j * j * aa;
                    if (nn > lim)
                        break;
                    for (int t = 0; t < n; ++t)
                        w[t] = mu[t] + j * a[t];
                    std::int64_t m = lookup(rs, w, cur);
                    if (m)
                        rhs += m * (mua + j * aa);
                }
                // n ≥ 1, ±ᾱ
                for (int nd = 1; nd <= depth; ++nd)
                    for (int sgn = -1; sgn <= 1; sgn += 2)
                        for (int j = 1; j * nd <= depth; ++j) {
                            for (int t = 0; t < n; ++t)
                                w[t] = mu[t] + sgn * j * a[t];
                            std::int64_t m = mult(w, depth - j * nd);
                            if (m)
                                rhs += m * (sgn * mua + j * aa + k * nd * S);
                        }
            }
            for (int nd = 1; nd <= depth; ++nd)
                for (int j = 1; j * nd <= depth; ++j) {
                    std::int64_t m = mult(mu, depth - j * nd);
                    if (m)
                        rhs += static_cast<std::int64_t>(n) * m * k * nd * S;
                }
            rhs *= 2;
            if (rhs == 0)
                continue;
            if (denom <= 0 || rhs % denom != 0)
                throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
            cur[mu] = rhs / denom;
        }
    }

    static std::int64_t lookup(const RootSystem& rs, const IVec& w, const std::map<IVec, std::int64_t>& slice)
    {
        auto it = slice.find(dominant_of(rs, w));
        return it == slice.end() ? 0 : it->second;
    }
};

// Per-thread memo of modules keyed by (root system, level, highest weight).
class RepCache {
public:
    HighestWeightModule& module(const RootSystemPtr& rs, const IVec& lambda, int level = 0)
    {
        auto key = std::make_tuple(rs.get(), level, lambda);
        auto it = mods_.find(key);
        if (it == mods_.end())
            it = mods_.emplace(key, std::make_unique<HighestWeightModule>(rs, lambda, level)).first;
        return *it->second;
    }

private:
    std::map<std::tuple<const RootSystem*, int, IVec>, std::unique_ptr<HighestWeightModule>> mods_;
};

inline RepCache& thread_cache()
{
    thread_local RepCache cache;
    return cache;
}

// ---------------------------------------------------------------- characters

struct FormalCharacter {
    RootSystemPtr rs;
    std::map<IVec, std::int64_t> mult;

    std::int64_t total() const
    {
        std::int64_t t = 0;
        for (const auto& kv : mult)
            t += kv.second;
        return t;
    }
};

inline const std::map<IVec, std::int64_t>& dominant_character(const RootSystemPtr& rs, const IVec& lambda,
                                                              RepCache& cache = thread_cache())
{
    return cache.module(rs, lambda).slice(0);
}

inline FormalCharacter weight_multiplicities(const Weight& lambda, std::int64_t cap = default_dim_cap,
                                             RepCache& cache = thread_cache())
{
    if (!lambda.dominant())
        throw std::invalid_argument("weight_multiplicities needs a dominant weight");
    std::int64_t d = weyl_dim(lambda);
    if (d > cap)
        throw std::length_error("dimension " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
    FormalCharacter fc{lambda.rs, {}};
    for (const auto& [mu, m] : dominant_character(lambda.rs, lambda.coords, cache))
        for (IVec& w : weyl_orbit(*lambda.rs, mu))
            fc.mult[std::move(w)] = m;
    return fc;
}

using Multiset = std::map<IVec, std::int64_t>;

// Brauer–Klimyk over the weights of the smaller factor.
inline Multiset tensor_decompose(const Weight& lambda, const Weight& mu, std::int64_t cap = default_dim_cap,
                                 RepCache& cache = thread_cache())
{
    if (lambda.rs != mu.rs)
        throw std::invalid_argument("tensor_decompose across root systems");
    if (!lambda.dominant() || !mu.dominant())
        throw std::invalid_argument("tensor_decompose needs dominant weights");
    const RootSystem& rs = *lambda.rs;
    std::int64_t dl = weyl_dim(lambda), dm = weyl_dim(mu);
    if (dl * dm > cap)
        throw std::length_error("tensor product dimension exceeds cap");
    const Weight& big = dl >= dm ? lambda : mu;
    const Weight& small = dl >= dm ? mu : lambda;
    std::map<IVec, std::int64_t> acc;
    for (const auto& [nu, m] : weight_multiplicities(small, cap, cache).mult) {
        IVec w(rs.rank);
        for (int i = 0; i < rs.rank; ++i)
            w[i] = big.coords[i] + nu[i] + 1;
        int sign = reflect_to_dominant(rs, w);
        if (std::find(w.begin(), w.end(), 0) != w.end())
            continue;
        for (int& c : w)
            c -= 1;
        acc[w] += sign * m;
    }
    Multiset out;
    for (auto& [w, m] : acc) {
        if (m < 0)
            throw std::logic_error("negative multiplicity in Brauer–Klimyk sum");
        if (m > 0)
            out[w] = m;
    }
    return out;
}

// ---------------------------------------------------------------- embeddings

// A product of simple factors; weights are concatenations of Dynkin labels.
using Product = std::vector<RootSystemPtr>;
using ProductWeight = std::vector<IVec>;

inline int product_rank(const Product& p)
{
    int r = 0;
    for (const auto& rs : p)
        r += rs->rank;
    return r;
}

inline IVec flatten(const ProductWeight& w)
{
    IVec out;
    for (const auto& part : w)
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

inline ProductWeight split(const Product& p, const IVec& flat)
{
    ProductWeight out;
    std::size_t off = 0;
    for (const auto& rs : p) {
        out.emplace_back(flat.begin() + off, flat.begin() + off + rs->rank);
        off += rs->rank;
    }
    return out;
}

struct EmbeddingSpec {
    std::string name;
    Product source;
    Product target;
    std::vector<IVec> projection;          // rows: source coordinates; columns: target coordinates
    std::vector<IVec> expected_index;      // [source factor][target factor]

    IVec project(const IVec& target_flat) const
    {
        IVec out(projection.size(), 0);
        for (std::size_t r = 0; r < projection.size(); ++r)
            for (std::size_t c = 0; c < target_flat.size(); ++c)
                out[r] += projection[r][c] * target_flat[c];
        return out;
    }

    void validate() const
    {
        if (static_cast<int>(projection.size()) != product_rank(source))
            throw std::invalid_argument(name + ": projection has wrong number of rows");
        for (const auto& row : projection)
            if (static_cast<int>(row.size()) != product_rank(target))
                throw std::invalid_argument(name + ": projection has wrong number of columns");
    }
};

inline EmbeddingSpec compose(const EmbeddingSpec& inner, const EmbeddingSpec& outer)
{
    // inner: G'' ⊂ G', outer: G' ⊂ G
    EmbeddingSpec e;
    e.name = inner.name + " * " + outer.name;
    e.source = inner.source;
    e.target = outer.target;
    const std::size_t rows = inner.projection.size(), mid = outer.projection.size(),
                      cols = outer.projection.empty() ? 0 : outer.projection[0].size();
    e.projection.assign(rows, IVec(cols, 0));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t m = 0; m < mid; ++m)
            for (std::size_t c = 0; c < cols; ++c)
                e.projection[r][c] += inner.projection[r][m] * outer.projection[m][c];
    return e;
}

// Full weight system of an outer tensor product, flattened.
inline std::map<IVec, std::int64_t> product_weights(const Product& p, const ProductWeight& lambda, std::int64_t cap,
                                                    RepCache& cache)
{
    std::int64_t dim = 1;
    for (std::size_t f = 0; f < p.size(); ++f)
        dim *= weyl_dim(*p[f], lambda[f]);
    if (dim > cap)
        throw std::length_error("dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
    std::map<IVec, std::int64_t> acc{{IVec{}, 1}};
    for (std::size_t f = 0; f < p.size(); ++f) {
        auto fc = weight_multiplicities(Weight{p[f], lambda[f]}, cap, cache);
        std::map<IVec, std::int64_t> next;
        for (const auto& [a, ma] : acc)
            for (const auto& [b, mb] : fc.mult) {
                IVec w = a;
                w.insert(w.end(), b.begin(), b.end());
                next[std::move(w)] += ma * mb;
            }
        acc = std::move(next);
    }
    return acc;
}

// Dominant part of the irreducible character of a product, flattened.
inline std::map<IVec, std::int64_t> product_dominant_character(const Product& p, const ProductWeight& lambda,
                                                               RepCache& cache)
{
    std::map<IVec, std::int64_t> acc{{IVec{}, 1}};
    for (std::size_t f = 0; f < p.size(); ++f) {
        const auto& dc = dominant_character(p[f], lambda[f], cache);
        std::map<IVec, std::int64_t> next;
        for (const auto& [a, ma] : acc)
            for (const auto& [b, mb] : dc) {
                IVec w = a;
                w.insert(w.end(), b.begin(), b.end());
                next[std::move(w)] += ma * mb;
            }
        acc = std::move(next);
    }
    return acc;
}

using Decomposition = std::map<ProductWeight, std::int64_t>;

// Decompose a dominant restricted character by highest-weight extraction.
inline Decomposition extract_irreducibles(const Product& p, std::map<IVec, std::int64_t> dom, RepCache& cache)
{
    Decomposition out;
    auto height = [&](const IVec& flat) {
        Rational h = 0;
        std::size_t off = 0;
        for (const auto& rs : p) {
            IVec part(flat.begin() + off, flat.begin() + off + rs->rank);
            h += rs->inner(part, rs->rho);
            off += rs->rank;
        }
        return h;
    };
    while (!dom.empty()) {
        auto best = dom.begin();
        Rational bh = height(best->first);
        for (auto it = std::next(dom.begin()); it != dom.end(); ++it) {
            Rational h = height(it->first);
            if (h > bh) {
                bh = h;
                best = it;
            }
        }
        IVec top = best->first;
        std::int64_t m = best->second;
        if (m < 0)
            throw std::logic_error("restriction left a non-decomposable residue");
        out[split(p, top)] += m;
        for (const auto& [w, c] : product_dominant_character(p, split(p, top), cache)) {
            auto it = dom.find(w);
            std::int64_t v = (it == dom.end() ? 0 : it->second) - m * c;
            if (v == 0) {
                if (it != dom.end())
                    dom.erase(it);
            } else if (it == dom.end()) {
                dom.emplace(w, v);
            } else {
                it->second = v;
            }
        }
    }
    return out;
}

inline Decomposition restrict(const ProductWeight& lambda, const EmbeddingSpec& e, std::int64_t cap = default_dim_cap,
                              RepCache& cache = thread_cache())
{
    e.validate();
    std::map<IVec, std::int64_t> dom;
    for (const auto& [w, m] : product_weights(e.target, lambda, cap, cache)) {
        IVec s = e.project(w);
        if (std::all_of(s.begin(), s.end(), [](int c) { return c >= 0; }))
            dom[s] += m;
    }
    return extract_irreducibles(e.source, std::move(dom), cache);
}

inline std::int64_t product_dim(const Product& p, const ProductWeight& w)
{
    std::int64_t d = 1;
    for (std::size_t f = 0; f < p.size(); ++f)
        d *= weyl_dim(*p[f], w[f]);
    return d;
}

// Nonzero fundamental weight of least dimension.
inline IVec smallest_fundamental(const RootSystem& rs)
{
    IVec best;
    std::int64_t bd = -1;
    for (int i = 1; i <= rs.rank; ++i) {
        IVec w = rs.fundamental(i);
        std::int64_t d = weyl_dim(rs, w);
        if (bd < 0 || d < bd) {
            bd = d;
            best = w;
        }
    }
    return best;
}

// j[s][t] = T(V_t|source s) / T(V_t), T(V) = Σ_μ (μ,μ) / rank, for a chosen
// rep V_t of target factor t (trivial on the other factors).
inline std::vector<IVec> dynkin_index(const EmbeddingSpec& e, const std::vector<IVec>& reps = {},
                                      RepCache& cache = thread_cache())
{
    e.validate();
    std::vector<IVec> j(e.source.size(), IVec(e.target.size(), 0));
    std::size_t toff = 0;
    for (std::size_t t = 0; t < e.target.size(); ++t) {
        const RootSystem& rt = *e.target[t];
        IVec rep = reps.empty() ? smallest_fundamental(rt) : reps[t];
        auto fc = weight_multiplicities(Weight{e.target[t], rep}, 1 << 20, cache);
        Rational tt = 0;
        std::vector<Rational> ts(e.source.size(), Rational(0));
        IVec flat(product_rank(e.target), 0);
        for (const auto& [w, m] : fc.mult) {
            tt += Rational(m) * rt.inner(w, w);
            std::copy(w.begin(), w.end(), flat.begin() + toff);
            ProductWeight s = split(e.source, e.project(flat));
            for (std::size_t f = 0; f < e.source.size(); ++f)
                ts[f] += Rational(m) * e.source[f]->inner(s[f], s[f]);
        }
        tt /= Rational(rt.rank);
        for (std::size_t f = 0; f < e.source.size(); ++f) {
            Rational r = ts[f] / Rational(e.source[f]->rank) / tt;
            if (!r.is_integer())
                throw std::domain_error(e.name + ": non-integral Dynkin index " + r.str());
            j[f][t] = static_cast<int>(r.num());
        }
        toff += rt.rank;
    }
    return j;
}

} // namespace svoa
