#pragma once

#include "svoa/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace svoa {

enum class LieType { A, B, C, D, E6, E7, E8, F4, G2 };

using IVec = std::vector<int>;
using RMatrix = std::vector<std::vector<Rational>>;

inline std::string type_name(LieType t)
{
    switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
    case LieType::E8: return "E8";
    case LieType::F4: return "F4";
    case LieType::G2: return "G2";
    }
    return "?";
}

// Accepts "A".."D", "E6", "E7", "E8", "F4", "G2", and bare "E"/"F"/"G" (rank then decides).
inline LieType parse_type(const std::string& s, int rank = 0)
{
    if (s == "A") return LieType::A;
    if (s == "B") return LieType::B;
    if (s == "C") return LieType::C;
    if (s == "D") return LieType::D;
    if (s == "E6" || (s == "E" && rank == 6)) return LieType::E6;
    if (s == "E7" || (s == "E" && rank == 7)) return LieType::E7;
    if (s == "E8" || (s == "E" && rank == 8)) return LieType::E8;
    if (s == "F4" || (s == "F" && rank == 4)) return LieType::F4;
    if (s == "G2" || (s == "G" && rank == 2)) return LieType::G2;
    throw std::invalid_argument("unknown Lie type '" + s + "'");
}

inline bool is_exceptional(LieType t) { return t >= LieType::E6; }

inline int fixed_rank(LieType t)
{
    switch (t) {
    case LieType::E6: return 6;
    case LieType::E7: return 7;
    case LieType::E8: return 8;
    case LieType::F4: return 4;
    case LieType::G2: return 2;
    default: return 0;
    }
}

inline bool valid_rank(LieType t, int rank)
{
    switch (t) {
    case LieType::A: return rank >= 1;
    case LieType::B: return rank >= 2;
    case LieType::C: return rank >= 2;
    case LieType::D: return rank >= 3;
    default: return rank == fixed_rank(t);
    }
}

// Standard tables. The classical formulas are also used for B1 and D2, which
// gives the stable Spin(3) and Spin(4) values.
inline int dual_coxeter(LieType t, int n)
{
    switch (t) {
    case LieType::A: return n + 1;
    case LieType::B: return 2 * n - 1;
    case LieType::C: return n + 1;
    case LieType::D: return 2 * n - 2;
    case LieType::E6: return 12;
    case LieType::E7: return 18;
    case LieType::E8: return 30;
    case LieType::F4: return 9;
    case LieType::G2: return 4;
    }
    return 0;
}

inline int lie_dim(LieType t, int n)
{
    switch (t) {
    case LieType::A: return n * (n + 2);
    case LieType::B: return n * (2 * n + 1);
    case LieType::C: return n * (2 * n + 1);
    case LieType::D: return n * (2 * n - 1);
    case LieType::E6: return 78;
    case LieType::E7: return 133;
    case LieType::E8: return 248;
    case LieType::F4: return 52;
    case LieType::G2: return 14;
    }
    return 0;
}

struct CenterGroup {
    std::string name;                 // "1", "Z2", "Z4", "Z2xZ2", "Zm"
    std::vector<std::string> labels;  // index 0 is the identity
    std::vector<int> node;            // cominuscule node (1-based), 0 for identity
    std::vector<int> order;
    std::vector<std::vector<int>> add;

    int size() const { return static_cast<int>(labels.size()); }

    int index_of(const std::string& label) const
    {
        for (int i = 0; i < size(); ++i)
            if (labels[i] == label)
                return i;
        throw std::invalid_argument("no center element '" + label + "' (group " + name + ")");
    }
};

namespace detail {

inline RMatrix rational_inverse(const RMatrix& m)
{
    const int n = static_cast<int>(m.size());
    RMatrix a = m;
    RMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col] == Rational(0))
            ++piv;
        if (piv == n)
            throw std::domain_error("singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == Rational(0))
                continue;
            Rational f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline CenterGroup cyclic_center(int m, const std::vector<std::string>& labels, const std::vector<int>& nodes)
{
    CenterGroup g;
    g.name = m == 1 ? "1" : "Z" + std::to_string(m);
    g.labels = labels;
    g.node = nodes;
    g.add.assign(m, std::vector<int>(m));
    g.order.assign(m, 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j)
            g.add[i][j] = (i + j) % m;
        g.order[i] = m / std::gcd(i, m);
    }
    return g;
}

inline CenterGroup build_center(LieType t, int n)
{
    switch (t) {
    case LieType::A: {
        std::vector<std::string> labels;
        std::vector<int> nodes;
        for (int i = 0; i <= n; ++i) {
            labels.push_back(std::to_string(i));
            nodes.push_back(i);
        }
        return cyclic_center(n + 1, labels, nodes);
    }
    case LieType::B: return cyclic_center(2, {"0", "v"}, {0, 1});
    case LieType::C: return cyclic_center(2, {"0", "c"}, {0, n});
    case LieType::D: {
        CenterGroup g;
        g.labels = {"0", "v", "s+", "s-"};
        g.node = {0, 1, n, n - 1};
        if (n % 2 == 0) {
            g.name = "Z2xZ2";
            // v = s+ + s-
            g.add = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
            g.order = {1, 2, 2, 2};
        } else {
            g.name = "Z4";
            // s+ generates; v = 2 s+, s- = 3 s+
            const int pos[4] = {0, 2, 1, 3};  // index -> exponent of s+
            const int idx[4] = {0, 2, 1, 3};  // exponent -> index
            g.add.assign(4, std::vector<int>(4));
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    g.add[i][j] = idx[(pos[i] + pos[j]) % 4];
            g.order = {1, 2, 4, 4};
        }
        return g;
    }
    case LieType::E6: return cyclic_center(3, {"0", "z", "z2"}, {0, 1, 6});
    case LieType::E7: return cyclic_center(2, {"0", "z"}, {0, 7});
    default: return cyclic_center(1, {"0"}, {0});
    }
}

} // namespace detail

struct RootSystem {
    LieType type = LieType::A;
    int rank = 0;
    std::vector<std::vector<int>> cartan;          // a_ij = 2(α_i,α_j)/(α_i,α_i)
    RMatrix sym_form;                              // (α_i,α_j), long roots have length² 2
    std::vector<IVec> simple_roots;                // α_i in Dynkin labels
    RMatrix fundamental_weights;                   // ω_i in simple-root coordinates
    RMatrix fund_gram;                             // (ω_i,ω_j)
    std::int64_t form_scale = 1;                   // S·(ω_i,ω_j) is integral
    std::vector<std::vector<std::int64_t>> gram_scaled;
    std::vector<IVec> positive_roots;              // simple-root coordinates
    std::vector<IVec> positive_root_labels;        // Dynkin labels
    std::vector<int> root_length2x3;               // 3·(α,α) for each positive root
    IVec rho;
    IVec theta;                                    // Dynkin labels of the highest root
    IVec marks;                                    // θ in simple-root coordinates
    IVec comarks;
    int dual_coxeter = 0;
    int dim_g = 0;
    CenterGroup center;

    std::string name() const
    {
        return is_exceptional(type) ? type_name(type) : type_name(type) + std::to_string(rank);
    }

    int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }

    std::int64_t inner_scaled(const IVec& a, const IVec& b) const
    {
        std::int64_t s = 0;
        for (int i = 0; i < rank; ++i) {
            if (a[i] == 0)
                continue;
            std::int64_t row = 0;
            for (int j = 0; j < rank; ++j)
                row += gram_scaled[i][j] * b[j];
            s += row * a[i];
        }
        return s;
    }

    Rational inner(const IVec& a, const IVec& b) const { return Rational(inner_scaled(a, b), form_scale); }

    // ⟨λ, θ∨⟩ = (λ, θ) since (θ,θ) = 2.
    int level_of(const IVec& lambda) const
    {
        int s = 0;
        for (int i = 0; i < rank; ++i)
            s += lambda[i] * comarks[i];
        return s;
    }

    bool in_root_lattice(const IVec& v) const
    {
        for (int j = 0; j < rank; ++j) {
            Rational c = 0;
            for (int i = 0; i < rank; ++i)
                if (v[i] != 0)
                    c += Rational(v[i]) * inverse_labels[i][j];
            if (!c.is_integer())
                return false;
        }
        return true;
    }

    IVec fundamental(int node) const
    {
        IVec w(rank, 0);
        w.at(node - 1) = 1;
        return w;
    }

    RMatrix inverse_labels;  // inverse of the simple-root label matrix
};

inline RootSystem build_root_system(LieType t, int n)
{
    if (!valid_rank(t, n))
        throw std::invalid_argument("invalid rank " + std::to_string(n) + " for type " + type_name(t));
    RootSystem rs;
    rs.type = t;
    rs.rank = n;

    std::vector<Rational> len(n, Rational(2));
    std::vector<std::pair<int, int>> bonds;  // 0-based, value filled below
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i)
            bonds.emplace_back(i, i + 1);
    };
    switch (t) {
    case LieType::A: chain(0, n - 1); break;
    case LieType::B: chain(0, n - 1); len[n - 1] = 1; break;
    case LieType::C:
        chain(0, n - 1);
        for (int i = 0; i < n - 1; ++i)
            len[i] = 1;
        break;
    case LieType::D:
        chain(0, n - 2);
        bonds.emplace_back(n - 3, n - 1);
        break;
    case LieType::E6:
    case LieType::E7:
    case LieType::E8:
        bonds.emplace_back(0, 2);
        chain(2, n - 1);
        bonds.emplace_back(1, 3);
        break;
    case LieType::F4:
        chain(0, 3);
        len[2] = len[3] = 1;
        break;
    case LieType::G2:
        chain(0, 1);
        len[0] = Rational(2, 3);
        break;
    }

    rs.sym_form.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        rs.sym_form[i][i] = len[i];
    for (auto [i, j] : bonds) {
        // equal lengths: -|α|²/2; double and triple bonds: -1
        Rational v = len[i] == len[j] ? -len[i] / Rational(2) : Rational(-1);
        rs.sym_form[i][j] = rs.sym_form[j][i] = v;
    }

    rs.cartan.assign(n, std::vector<int>(n, 0));
    rs.simple_roots.assign(n, IVec(n, 0));
    RMatrix labels(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational a = Rational(2) * rs.sym_form[i][j] / rs.sym_form[i][i];
            Rational l = Rational(2) * rs.sym_form[i][j] / rs.sym_form[j][j];
            rs.cartan[i][j] = static_cast<int>(a.num());
            rs.simple_roots[i][j] = static_cast<int>(l.num());
            labels[i][j] = l;
        }
    rs.inverse_labels = detail::rational_inverse(labels);
    rs.fundamental_weights = rs.inverse_labels;

    rs.fund_gram.assign(n, std::vector<Rational>(n));
    std::int64_t scale = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            rs.fund_gram[i][j] = rs.inverse_labels[i][j] * rs.sym_form[j][j] / Rational(2);
            scale = std::lcm(scale, rs.fund_gram[i][j].den());
        }
    rs.form_scale = scale;
    rs.gram_scaled.assign(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs.gram_scaled[i][j] = (rs.fund_gram[i][j] * Rational(scale)).num();

    // Positive roots by the root-string criterion, processed by height.
    std::map<IVec, int> index;
    std::vector<IVec>& roots = rs.positive_roots;
    for (int i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        index[e] = static_cast<int>(roots.size());
        roots.push_back(e);
    }
    for (std::size_t r = 0; r < roots.size(); ++r) {
        IVec beta = roots[r];
        for (int i = 0; i < n; ++i) {
            int pairing = 0;  // ⟨β, α_i∨⟩
            for (int j = 0; j < n; ++j)
                pairing += beta[j] * rs.simple_roots[j][i];
            int p = 0;
            IVec down = beta;
            while (true) {
                down[i] -= 1;
                if (!index.count(down))
                    break;
                ++p;
            }
            if (p - pairing > 0) {
                IVec up = beta;
                up[i] += 1;
                if (!index.count(up)) {
                    index[up] = static_cast<int>(roots.size());
                    roots.push_back(up);
                }
            }
        }
    }
    for (const IVec& beta : roots) {
        IVec lab(n, 0);
        for (int j = 0; j < n; ++j)
            if (beta[j] != 0)
                for (int k = 0; k < n; ++k)
                    lab[k] += beta[j] * rs.simple_roots[j][k];
        // (β,β) = Σ_j β_j ⟨β,α_j∨⟩ |α_j|²/2
        Rational l2 = 0;
        for (int j = 0; j < n; ++j)
            if (beta[j] != 0)
                l2 += Rational(beta[j] * lab[j]) * len[j] / Rational(2);
        rs.positive_root_labels.push_back(lab);
        rs.root_length2x3.push_back(static_cast<int>((l2 * Rational(3)).num()));
    }

    auto height = [](const IVec& v) { return std::accumulate(v.begin(), v.end(), 0); };
    auto top = std::max_element(roots.begin(), roots.end(),
                                [&](const IVec& a, const IVec& b) { return height(a) < height(b); });
    rs.marks = *top;
    rs.theta = rs.positive_root_labels[top - roots.begin()];
    rs.comarks.assign(n, 0);
    for (int i = 0; i < n; ++i)
        rs.comarks[i] = static_cast<int>((Rational(rs.marks[i]) * rs.sym_form[i][i] / Rational(2)).num());
    rs.rho.assign(n, 1);
    rs.dual_coxeter = dual_coxeter(t, n);
    rs.dim_g = lie_dim(t, n);
    rs.center = detail::build_center(t, n);
    return rs;
}

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Shared, immutable root systems; construction is serialized, reads are lock-free after.
inline RootSystemPtr root_system(LieType t, int rank)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, RootSystemPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(t), rank);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    auto rs = std::make_shared<const RootSystem>(build_root_system(t, rank));
    cache.emplace(key, rs);
    return rs;
}

struct Weight {
    RootSystemPtr rs;
    IVec coords;

    bool dominant() const
    {
        return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
    }
    int level() const { return rs->level_of(coords); }
    friend bool operator==(const Weight& a, const Weight& b) { return a.rs == b.rs && a.coords == b.coords; }
};

inline Rational inner(const Weight& a, const Weight& b)
{
    if (a.rs != b.rs)
        throw std::invalid_argument("inner product of weights from different root systems");
    return a.rs->inner(a.coords, b.coords);
}

struct CenterElement {
    RootSystemPtr rs;
    int index = 0;

    bool trivial() const { return index == 0; }
    const std::string& label() const { return rs->center.labels.at(index); }
    int order() const { return rs->center.order.at(index); }
    int node() const { return rs->center.node.at(index); }
};

inline CenterElement center_element(RootSystemPtr rs, const std::string& label)
{
    int idx = rs->center.index_of(label);
    return CenterElement{std::move(rs), idx};
}

inline std::vector<CenterElement> center_elements(const RootSystemPtr& rs)
{
    std::vector<CenterElement> out;
    for (int i = 0; i < rs->center.size(); ++i)
        out.push_back(CenterElement{rs, i});
    return out;
}

inline Weight current_weight(const CenterElement& a, int k)
{
    if (a.trivial())
        throw std::invalid_argument("current_weight of the trivial center element");
    if (k < 1)
        throw std::invalid_argument("level must be positive");
    IVec w(a.rs->rank, 0);
    w[a.node() - 1] = k;
    return Weight{a.rs, w};
}

// Smallest index in the orbit of a center element under diagram automorphisms.
inline int canonical_center_index(const RootSystem& rs, int idx)
{
    switch (rs.type) {
    case LieType::A: return std::min(idx, (rs.rank + 1 - idx) % (rs.rank + 1));
    case LieType::D:
        if (rs.rank == 4 && idx != 0)
            return 1;
        return idx == 3 ? 2 : idx;
    case LieType::E6: return idx == 2 ? 1 : idx;
    default: return idx;
    }
}

struct WZWFactor {
    LieType type = LieType::A;
    int rank = 1;
    int level = 1;

    RootSystemPtr root_system() const { return svoa::root_system(type, rank); }

    friend bool operator==(const WZWFactor& a, const WZWFactor& b)
    {
        return a.type == b.type && a.rank == b.rank && a.level == b.level;
    }
    friend bool operator<(const WZWFactor& a, const WZWFactor& b)
    {
        return std::tie(a.type, a.rank, a.level) < std::tie(b.type, b.rank, b.level);
    }
};

// Group name in the conventions of the tables: A1 is written Sp(2x1).
inline std::string group_name(LieType t, int n)
{
    switch (t) {
    case LieType::A: return n == 1 ? "Sp(2x1)" : "SU(" + std::to_string(n + 1) + ")";
    case LieType::B: return "Spin(" + std::to_string(2 * n + 1) + ")";
    case LieType::C: return "Sp(2x" + std::to_string(n) + ")";
    case LieType::D: return "Spin(" + std::to_string(2 * n) + ")";
    default: return type_name(t);
    }
}

inline std::string factor_name(const WZWFactor& f) { return group_name(f.type, f.rank) + "_" + std::to_string(f.level); }

struct CanonicalForm {
    std::vector<WZWFactor> factors;
    bool triality = false;
};

inline CanonicalForm canonicalize(const WZWFactor& f)
{
    CanonicalForm out;
    if (f.type == LieType::B && f.rank == 1)
        out.factors = {WZWFactor{LieType::A, 1, 2 * f.level}};
    else if (f.type == LieType::D && f.rank == 2)
        out.factors = {WZWFactor{LieType::A, 1, f.level}, WZWFactor{LieType::A, 1, f.level}};
    else if (f.type == LieType::B && f.rank == 2)
        out.factors = {WZWFactor{LieType::C, 2, f.level}};
    else if (f.type == LieType::D && f.rank == 3)
        out.factors = {WZWFactor{LieType::A, 3, f.level}};
    else if (f.type == LieType::C && f.rank == 1)
        out.factors = {WZWFactor{LieType::A, 1, f.level}};
    else
        out.factors = {f};
    out.triality = f.type == LieType::D && f.rank == 4;
    return out;
}

// Image of a center element under the exceptional isomorphisms used by
// canonicalize. Labels on the canonical side are center labels of each factor.
inline std::vector<std::string> canonicalize_center_label(const WZWFactor& f, const std::string& label)
{
    if (f.type == LieType::B && f.rank == 1)
        return {label == "0" ? "0" : "1"};
    if (f.type == LieType::C && f.rank == 1)
        return {label == "0" ? "0" : "1"};
    if (f.type == LieType::D && f.rank == 2) {
        if (label == "0") return {"0", "0"};
        if (label == "v") return {"1", "1"};
        if (label == "s+") return {"0", "1"};
        return {"1", "0"};
    }
    if (f.type == LieType::B && f.rank == 2)
        return {label == "0" ? "0" : "c"};
    if (f.type == LieType::D && f.rank == 3) {
        if (label == "0") return {"0"};
        if (label == "v") return {"2"};
        if (label == "s+") return {"1"};
        return {"3"};
    }
    return {label};
}

} // namespace svoa
