#pragma once

#include "svoa/anyon_arith.hpp"
#include "svoa/lie_core.hpp"
#include "svoa/rational.hpp"
#include "svoa/weyl_reps.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace svoa {

// ---------------------------------------------------------------- canonical keys

// (type, rank, level, canonical center index); index -1 marks the E8 exceptional current.
using KeyPart = std::array<int, 4>;
using CanonicalKey = std::vector<KeyPart>;

inline void append_key(const FactorCurrent& p, CanonicalKey& key)
{
    if (p.exceptional) {
        key.push_back({static_cast<int>(p.factor.type), p.factor.rank, p.factor.level, -1});
        return;
    }
    auto cf = canonicalize(p.factor);
    auto labels = canonicalize_center_label(p.factor, p.label());
    for (std::size_t i = 0; i < cf.factors.size(); ++i) {
        const auto& f = cf.factors[i];
        auto rs = f.root_system();
        int idx = canonical_center_index(*rs, rs->center.index_of(labels[i]));
        key.push_back({static_cast<int>(f.type), f.rank, f.level, idx});
    }
}

inline CanonicalKey canonical_key(const CurrentLabel& c)
{
    CanonicalKey key;
    for (const auto& p : c.parts)
        append_key(p, key);
    std::sort(key.begin(), key.end());
    return key;
}

inline FactorCurrent from_key(const KeyPart& k)
{
    WZWFactor f{static_cast<LieType>(k[0]), k[1], k[2]};
    if (k[3] < 0)
        return FactorCurrent{f, 0, true};
    return FactorCurrent{f, k[3], false};
}

// Canonical representative; parts ordered largest first.
inline CurrentLabel canonical_current(const CurrentLabel& c)
{
    CanonicalKey key = canonical_key(c);
    std::reverse(key.begin(), key.end());
    std::stable_sort(key.begin(), key.end(), [](const KeyPart& a, const KeyPart& b) { return a[1] > b[1]; });
    CurrentLabel out;
    for (const auto& k : key)
        out.parts.push_back(from_key(k));
    return out;
}

// Vector current of Spin(m)_k, m ≥ 3, as canonical simple pieces.
inline std::vector<FactorCurrent> spin_vector_current(int m, int k)
{
    if (m < 3)
        throw std::invalid_argument("Spin(m) needs m >= 3");
    if (m == 3)
        return {FactorCurrent{WZWFactor{LieType::A, 1, 2 * k}, 1, false}};
    if (m == 4)
        return {FactorCurrent{WZWFactor{LieType::A, 1, k}, 1, false}, FactorCurrent{WZWFactor{LieType::A, 1, k}, 1, false}};
    WZWFactor f{m % 2 ? LieType::B : LieType::D, m / 2, k};
    return {FactorCurrent{f, 1, false}};
}

inline CurrentLabel spin_vector_power(int m, int k, int copies)
{
    CurrentLabel c;
    for (int i = 0; i < copies; ++i)
        for (const auto& p : spin_vector_current(m, k))
            c.parts.push_back(p);
    return canonical_current(c);
}

// ---------------------------------------------------------------- candidates

struct TestStatus {
    bool pass = true;
    std::string reason;
};

struct Candidate {
    CurrentLabel current;
    Rational h;
    Rational c;
    std::int64_t dim32 = 0;
    std::map<std::string, TestStatus> status;
    std::vector<std::string> notes;

    std::vector<WZWFactor> factors() const { return current.factors(); }

    bool accepted() const
    {
        return std::all_of(status.begin(), status.end(), [](const auto& s) { return s.second.pass; });
    }

    std::string name() const
    {
        std::string out;
        for (std::size_t i = 0; i < current.parts.size();) {
            std::size_t j = i;
            while (j < current.parts.size() && current.parts[j].factor == current.parts[i].factor)
                ++j;
            if (!out.empty())
                out += " x ";
            out += factor_name(current.parts[i].factor);
            if (j - i > 1)
                out += "^" + std::to_string(j - i);
            i = j;
        }
        return out;
    }

    std::string current_name() const
    {
        if (current.parts.size() == 1)
            return current.parts[0].label();
        std::string out = "(";
        for (std::size_t i = 0; i < current.parts.size(); ++i)
            out += (i ? ", " : "") + current.parts[i].label();
        return out + ")";
    }

    CanonicalKey key() const { return canonical_key(current); }
};

inline Candidate make_candidate(const CurrentLabel& cur)
{
    Candidate c;
    c.current = cur;
    c.h = cur.h();
    c.c = sugawara_c(cur.factors());
    c.dim32 = cur.dim();
    return c;
}

inline bool all_isomorphic(const Candidate& c)
{
    auto key = c.key();
    return std::all_of(key.begin(), key.end(), [&](const KeyPart& k) { return k == key.front(); });
}

// ---------------------------------------------------------------- families

struct FamilyReport {
    std::string name;  // e.g. "Spin(m)_3" or "Spin(m)_1^3"
    int level = 1;
    int copies = 1;
    std::string dim_formula;
    std::string c_formula;
    std::vector<std::pair<int, Candidate>> instances;  // (m, candidate), m ascending
};

inline std::string spin_family_name(int k, int copies)
{
    return "Spin(m)_" + std::to_string(k) + (copies > 1 ? "^" + std::to_string(copies) : "");
}

// dim of the traceless symmetric k-tensors on m, raised to the number of copies.
inline std::string spin_family_dim(int k, int copies)
{
    std::string base;
    switch (k) {
    case 1: base = "m"; break;
    case 2: base = "(m+2)(m-1)/2"; break;
    case 3: base = "m(m-1)(m+4)/6"; break;
    default: base = "dim Sym^" + std::to_string(k) + "_0(m)";
    }
    if (copies == 1)
        return base;
    return (k == 1 ? base : "(" + base + ")") + "^" + std::to_string(copies);
}

inline std::string spin_family_c(int k, int copies)
{
    if (k == 1)
        return copies == 1 ? "m/2" : std::to_string(copies) + "m/2";
    std::string pre = copies * k == 1 ? "" : std::to_string(copies * k);
    if (k == 2)
        return copies == 1 ? "m-1" : pre + "(m-1)/2";
    return pre + "m(m-1)/(2(m+" + std::to_string(k - 2) + "))";
}

inline std::int64_t spin_family_dim_value(int m, int k)
{
    // C(m+k-1,k) - C(m+k-3,k-2)
    auto binom = [](std::int64_t n, std::int64_t r) -> std::int64_t {
        if (r < 0 || n < r)
            return 0;
        std::int64_t b = 1;
        for (std::int64_t i = 1; i <= r; ++i)
            b = b * (n - r + i) / i;
        return b;
    };
    return binom(m + k - 1, k) - binom(m + k - 3, k - 2);
}

inline Rational spin_family_c_value(int m, int k)
{
    return Rational(static_cast<std::int64_t>(k) * m * (m - 1), 2 * (m + k - 2));
}

// ---------------------------------------------------------------- simple currents

namespace detail {

inline std::vector<LieType> types_with_center() { return {LieType::A, LieType::B, LieType::C, LieType::D, LieType::E6, LieType::E7}; }

inline int min_rank(LieType t) { return is_exceptional(t) ? fixed_rank(t) : (t == LieType::D ? 3 : t == LieType::A ? 1 : 2); }

// Order-2 currents of simple factors with rank ≤ max_rank and level ≤ max_level,
// accepted by keep(h). Levels stop once h exceeds h_cap (h is increasing in k).
template <class Keep>
std::map<CanonicalKey, FactorCurrent> order_two_currents(int max_rank, int max_level, const Rational& h_cap, Keep keep)
{
    std::map<CanonicalKey, FactorCurrent> out;
    for (LieType t : types_with_center()) {
        const int lo = min_rank(t), hi = is_exceptional(t) ? fixed_rank(t) : max_rank;
        for (int n = lo; n <= hi && n <= max_rank; ++n) {
            auto rs = root_system(t, n);
            for (const auto& a : center_elements(rs)) {
                if (a.order() != 2)
                    continue;
                for (int k = 1; k <= max_level; ++k) {
                    Rational h = conformal_dim(a, k);
                    if (h > h_cap)
                        break;
                    if (!keep(h))
                        continue;
                    CurrentLabel c{{FactorCurrent{WZWFactor{t, n, k}, a.index, false}}};
                    CanonicalKey key = canonical_key(c);
                    if (key.size() == 1)
                        out.emplace(key, from_key(key.front()));
                }
            }
        }
    }
    return out;
}

// key -> m for the vector-current family Spin(m)_k^copies, m ≤ max_m.
inline std::map<CanonicalKey, int> spin_family_keys(int k, int copies, int max_m, bool include_m4)
{
    std::map<CanonicalKey, int> out;
    for (int m = 3; m <= max_m; ++m) {
        if (m == 4 && !include_m4)
            continue;
        out.emplace(canonical_key(spin_vector_power(m, k, copies)), m);
    }
    return out;
}

inline bool by_c_then_name(const Candidate& a, const Candidate& b)
{
    if (a.c != b.c)
        return a.c < b.c;
    return a.name() < b.name();
}

} // namespace detail

// ---------------------------------------------------------------- simple classification

struct SimpleClassification {
    std::vector<FamilyReport> families;
    std::vector<Candidate> sporadic;

    std::size_t size() const { return families.size() + sporadic.size(); }
};

inline SimpleClassification enumerate_simple(const Rational& target_h, int max_rank = 64, int max_level = 24)
{
    if (target_h <= Rational(0))
        throw std::invalid_argument("target h must be positive");
    auto found = detail::order_two_currents(max_rank, max_level, target_h,
                                            [&](const Rational& h) { return h == target_h; });

    std::map<CanonicalKey, int> fam;
    const Rational twice = target_h * Rational(2);
    const int k = twice.is_integer() ? static_cast<int>(twice.num()) : 0;
    if (k >= 1)
        fam = detail::spin_family_keys(k, 1, 2 * max_rank + 1, false);

    SimpleClassification out;
    FamilyReport family{spin_family_name(k, 1), k, 1, spin_family_dim(k, 1), spin_family_c(k, 1), {}};
    for (const auto& [key, fc] : found) {
        Candidate c = make_candidate(CurrentLabel{{fc}});
        c.status["h"] = {c.h == target_h, "h = " + c.h.str()};
        c.status["order_two"] = {c.current.order() == 2, ""};
        c.status["admissible"] = {extension_admissible({CurrentLabel{{FactorCurrent{fc.factor, 0, false}}}, c.current}), ""};
        auto it = fam.find(key);
        if (it != fam.end())
            family.instances.emplace_back(it->second, c);
        else
            out.sporadic.push_back(c);
    }
    if (target_h == Rational(3, 2) && max_rank >= 8 && max_level >= 2) {
        Candidate c = make_candidate(CurrentLabel{{e8_exceptional_current()}});
        c.status["h"] = {c.h == target_h, "h = " + c.h.str()};
        c.notes.push_back("exceptional current outside the center");
        out.sporadic.push_back(c);
    }
    if (!family.instances.empty()) {
        std::sort(family.instances.begin(), family.instances.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out.families.push_back(std::move(family));
    }
    std::sort(out.sporadic.begin(), out.sporadic.end(), detail::by_c_then_name);
    return out;
}

// ---------------------------------------------------------------- factor table

struct FactorRow {
    Rational h;
    std::string factor;
    std::string dim;
    bool family = false;
    std::optional<FactorCurrent> current;  // sporadic rows
    std::vector<int> instances;            // family rows: m values found within the rank cap
};

// Canonical simple factors with an order-2 current of 0 < h < max_h.
inline std::vector<FactorCurrent> factor_currents(const Rational& max_h = Rational(3, 2), int max_rank = 24)
{
    auto found = detail::order_two_currents(max_rank, 1 << 20, max_h, [&](const Rational& h) { return h < max_h; });
    std::vector<FactorCurrent> out;
    for (const auto& [key, fc] : found)
        out.push_back(fc);
    return out;
}

inline std::vector<FactorRow> enumerate_factor_table(const Rational& max_h = Rational(3, 2), int max_rank = 32)
{
    auto found = detail::order_two_currents(max_rank, 1 << 20, max_h, [&](const Rational& h) { return h < max_h; });
    std::map<int, FactorRow> families;  // by level
    std::vector<FactorRow> rows;
    std::map<int, std::map<CanonicalKey, int>> fam_keys;
    for (const auto& [key, fc] : found) {
        Rational h = fc.h();
        Rational twice = h * Rational(2);
        if (twice.is_integer()) {
            int k = static_cast<int>(twice.num());
            if (!fam_keys.count(k))
                fam_keys[k] = detail::spin_family_keys(k, 1, 2 * max_rank + 1, false);
            auto it = fam_keys[k].find(key);
            if (it != fam_keys[k].end()) {
                auto& row = families[k];
                if (row.factor.empty()) {
                    row = FactorRow{h, spin_family_name(k, 1), spin_family_dim(k, 1), true, std::nullopt, {}};
                }
                if (weyl_dim(*fc.root_system(), fc.weight()) != spin_family_dim_value(it->second, k))
                    throw std::logic_error("family dimension formula disagrees at m = " + std::to_string(it->second));
                row.instances.push_back(it->second);
                continue;
            }
        }
        rows.push_back(FactorRow{h, factor_name(fc.factor), std::to_string(weyl_dim(*fc.root_system(), fc.weight())),
                                 false, fc, {}});
    }
    for (auto& [k, row] : families) {
        std::sort(row.instances.begin(), row.instances.end());
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end(), [](const FactorRow& a, const FactorRow& b) {
        if (a.h != b.h)
            return a.h < b.h;
        if (a.family != b.family)
            return a.family;
        if (a.dim.size() != b.dim.size())
            return a.dim.size() < b.dim.size();
        return a.dim < b.dim;
    });
    return rows;
}

// ---------------------------------------------------------------- R-R constancy

struct RejectionReport {
    std::string candidate;
    std::vector<IVec> module;   // highest weights of M
    std::vector<IVec> partner;  // highest weights of the fusion of M with the odd part
    Rational anomaly_module;
    Rational anomaly_partner;
    std::int64_t leading_module = 0;
    std::int64_t leading_partner = 0;
    Rational exponent;  // q-exponent of the first disagreement
    int depth = 0;      // exponent − min anomaly, rounded down
    std::int64_t coeff_module = 0;
    std::int64_t coeff_partner = 0;
};

struct RRResult {
    bool pass = true;
    int depth = 0;
    int pairs_checked = 0;
    std::optional<RejectionReport> rejection;
};

inline constexpr int default_rr_depth = 3;

namespace detail {

inline void integrable_weights(const RootSystem& rs, int budget, std::size_t node, IVec& cur, std::vector<IVec>& out)
{
    if (node == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (int c = 0; c * rs.comarks[node] <= budget; ++c) {
        cur[node] = c;
        integrable_weights(rs, budget - c * rs.comarks[node], node + 1, cur, out);
    }
    cur[node] = 0;
}

// Vacuum, the current, then every other integrable weight.
inline std::vector<IVec> probe_weights(const FactorCurrent& p)
{
    auto rs = p.root_system();
    std::vector<IVec> out{IVec(rs->rank, 0), p.weight()};
    IVec cur(rs->rank, 0);
    integrable_weights(*rs, p.factor.level, 0, cur, out);
    std::vector<IVec> uniq;
    for (auto& w : out)
        if (std::find(uniq.begin(), uniq.end(), w) == uniq.end())
            uniq.push_back(w);
    return uniq;
}

struct Series {
    Rational anomaly;
    std::vector<std::int64_t> dims;
};

inline Series product_series(const CurrentLabel& cur, const std::vector<IVec>& ws, const Rational& c, int depth,
                             RepCache& cache)
{
    Series s{Rational(0) - c / Rational(24), std::vector<std::int64_t>(depth + 1, 0)};
    s.dims[0] = 1;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        GradedDims g = affine_graded_dims(cur.parts[i].factor, ws[i], depth, cache);
        s.anomaly += g.h;
        std::vector<std::int64_t> next(depth + 1, 0);
        for (int a = 0; a <= depth; ++a)
            for (int b = 0; a + b <= depth; ++b)
                next[a + b] += s.dims[a] * g.dims[b];
        s.dims = std::move(next);
    }
    return s;
}

} // namespace detail

inline RRResult rr_constancy_test(const Candidate& cand, int depth = default_rr_depth, RepCache& cache = thread_cache())
{
    if (depth < 0 || depth > max_affine_depth)
        throw std::invalid_argument("rr depth exceeds the affine recursion cap");
    const auto& parts = cand.current.parts;
    if (parts.size() < 2)
        throw std::invalid_argument("rr_constancy_test needs at least two simple factors");
    for (const auto& p : parts)
        if (p.exceptional)
            throw std::invalid_argument("rr_constancy_test: no simple-current action for an exceptional current");

    std::vector<std::vector<IVec>> probes;
    for (const auto& p : parts)
        probes.push_back(detail::probe_weights(p));

    RRResult res;
    res.depth = depth;
    std::set<std::vector<IVec>> seen;
    std::vector<std::size_t> ix(parts.size(), 0);
    for (;;) {
        std::vector<IVec> m(parts.size());
        Rational charge = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            m[i] = probes[i][ix[i]];
            charge += monodromy_charge(parts[i].element(), m[i]);
        }
        if (charge.mod1() != Rational(0) && !seen.count(m)) {
            std::vector<IVec> jm(parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i)
                jm[i] = simple_current_action(parts[i].element(), parts[i].factor.level, m[i]);
            seen.insert(m);
            seen.insert(jm);
            ++res.pairs_checked;

            auto sm = detail::product_series(cand.current, m, cand.c, depth, cache);
            auto sp = detail::product_series(cand.current, jm, cand.c, depth, cache);
            std::map<Rational, std::pair<std::int64_t, std::int64_t>> coeff;
            for (int d = 0; d <= depth; ++d) {
                coeff[sm.anomaly + Rational(d)].first += sm.dims[d];
                coeff[sp.anomaly + Rational(d)].second += sp.dims[d];
            }
            // both series are known up to hi
            const Rational lo = std::min(sm.anomaly, sp.anomaly);
            const Rational hi = std::min(sm.anomaly, sp.anomaly) + Rational(depth);
            for (const auto& [e, cc] : coeff) {
                if (e > hi)
                    break;
                if (e == Rational(0) || cc.first == cc.second)
                    continue;
                RejectionReport r;
                r.candidate = cand.name();
                r.module = m;
                r.partner = jm;
                r.anomaly_module = sm.anomaly;
                r.anomaly_partner = sp.anomaly;
                r.leading_module = sm.dims[0];
                r.leading_partner = sp.dims[0];
                r.exponent = e;
                r.depth = static_cast<int>((e - lo).floor());
                r.coeff_module = cc.first;
                r.coeff_partner = cc.second;
                res.pass = false;
                res.rejection = r;
                return res;
            }
        }
        std::size_t i = 0;
        while (i < parts.size() && ++ix[i] == probes[i].size())
            ix[i++] = 0;
        if (i == parts.size())
            break;
    }
    return res;
}

// ---------------------------------------------------------------- semisimple classification

struct SemisimpleClassification {
    std::vector<FamilyReport> families;
    std::vector<Candidate> sporadic;
    std::size_t examined = 0;
    std::size_t rejected = 0;

    std::size_t size() const { return families.size() + sporadic.size(); }
};

// The stated rule that all factors be isomorphic, with Spin(16)_1 x Spin(8)_1 as the one exception.
inline bool isomorphic_rule(const Candidate& c)
{
    static const CanonicalKey exception = canonical_key(CurrentLabel{
        {FactorCurrent{WZWFactor{LieType::D, 8, 1}, 2, false}, FactorCurrent{WZWFactor{LieType::D, 4, 1}, 1, false}}});
    return all_isomorphic(c) || c.key() == exception;
}

// Multisets of factor-table currents with total h = 3/2, at least two factors,
// total rank ≤ max_rank, filtered by admissibility and the R-R test. With
// apply_isomorphic_rule the stated isomorphic-factor rule is applied on top.
inline SemisimpleClassification enumerate_semisimple(int max_factors = 6, int max_rank = 24, int depth = default_rr_depth,
                                                     bool apply_isomorphic_rule = false,
                                                     RepCache& cache = thread_cache())
{
    if (max_factors < 2)
        throw std::invalid_argument("max_factors must be at least 2");
    const Rational target(3, 2);
    std::vector<FactorCurrent> rows = factor_currents(target, max_rank);

    std::vector<std::vector<std::size_t>> picks;
    std::vector<std::size_t> stack;
    auto dfs = [&](auto&& self, std::size_t start, const Rational& h, int rank) -> void {
        if (h == target) {
            if (stack.size() >= 2)
                picks.push_back(stack);
            return;
        }
        if (static_cast<int>(stack.size()) == max_factors)
            return;
        for (std::size_t i = start; i < rows.size(); ++i) {
            Rational nh = h + rows[i].h();
            int nr = rank + rows[i].factor.rank;
            if (nh > target || nr > max_rank)
                continue;
            stack.push_back(i);
            self(self, i, nh, nr);
            stack.pop_back();
        }
    };
    dfs(dfs, 0, Rational(0), 0);

    auto fam3 = detail::spin_family_keys(1, 3, 2 * max_rank + 1, true);
    auto spin43 = canonical_key(spin_vector_power(4, 3, 1));

    SemisimpleClassification out;
    FamilyReport cubes{spin_family_name(1, 3), 1, 3, spin_family_dim(1, 3), spin_family_c(1, 3), {}};
    FamilyReport spin3{spin_family_name(3, 1), 3, 1, spin_family_dim(3, 1), spin_family_c(3, 1), {}};
    for (const auto& pick : picks) {
        CurrentLabel cur;
        for (auto i : pick)
            cur.parts.push_back(rows[i]);
        Candidate c = make_candidate(canonical_current(cur));
        ++out.examined;
        CurrentLabel vac;
        for (const auto& p : c.current.parts)
            vac.parts.push_back(FactorCurrent{p.factor, 0, false});
        c.status["admissible"] = {extension_admissible({vac, c.current}), ""};
        c.status["no_free_fermion"] = {c.h != Rational(1, 2), ""};
        RRResult rr = rr_constancy_test(c, depth, cache);
        if (rr.pass) {
            c.status["rr_constancy"] = {true, "pass (depth " + std::to_string(depth) + ")"};
        } else {
            const auto& r = *rr.rejection;
            c.status["rr_constancy"] = {false, std::to_string(r.coeff_module) + " vs " + std::to_string(r.coeff_partner) +
                                                   " at q^" + r.exponent.str()};
        }
        if (apply_isomorphic_rule)
            c.status["isomorphic_rule"] = {isomorphic_rule(c), ""};
        if (!c.accepted()) {
            ++out.rejected;
            continue;
        }
        if (!all_isomorphic(c))
            c.notes.push_back("mixed factors");
        auto key = c.key();
        if (auto it = fam3.find(key); it != fam3.end())
            cubes.instances.emplace_back(it->second, c);
        else if (key == spin43)
            spin3.instances.emplace_back(4, c);
        else
            out.sporadic.push_back(c);
    }
    for (auto* f : {&spin3, &cubes}) {
        std::sort(f->instances.begin(), f->instances.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        if (!f->instances.empty())
            out.families.push_back(*f);
    }
    std::sort(out.sporadic.begin(), out.sporadic.end(), detail::by_c_then_name);
    return out;
}

// ---------------------------------------------------------------- svoa table

struct SvoaRow {
    std::string name;
    std::string dim;
    std::string c;
    std::string automorphisms;  // static annotation
    bool family = false;
    std::optional<Candidate> candidate;
    std::vector<int> verified_m;  // family rows: m for which the formulas were checked
};

namespace detail {

inline FactorCurrent fc(LieType t, int n, int k, const std::string& label)
{
    auto rs = root_system(t, n);
    return FactorCurrent{WZWFactor{t, n, k}, rs->center.index_of(label), false};
}

} // namespace detail

inline std::vector<SvoaRow> svoa_table(int verify_up_to = 16)
{
    using detail::fc;
    std::vector<SvoaRow> rows;
    for (auto [k, copies, aut] : std::vector<std::tuple<int, int, std::string>>{
             {3, 1, "S_{m+1}"}, {1, 3, "2^{2(m-1)}:(S_3 x S_m) for m != 4; 2^6:3S_6 for m = 4"}}) {
        SvoaRow r{spin_family_name(k, copies), spin_family_dim(k, copies), spin_family_c(k, copies), aut, true,
                     std::nullopt, {}};
        for (int m = 3; m <= verify_up_to; ++m) {
            Candidate c = make_candidate(spin_vector_power(m, k, copies));
            std::int64_t d = 1;
            for (int i = 0; i < copies; ++i)
                d *= spin_family_dim_value(m, k);
            if (c.dim32 != d || c.c != spin_family_c_value(m, k) * Rational(copies) || c.h != Rational(3, 2))
                throw std::logic_error(r.name + ": formula mismatch at m = " + std::to_string(m));
            r.verified_m.push_back(m);
        }
        rows.push_back(r);
    }
    const std::vector<std::pair<std::vector<FactorCurrent>, std::string>> sporadic{
        {{fc(LieType::C, 3, 2, "c")}, "U3(3):2"},
        {{fc(LieType::C, 3, 1, "c"), fc(LieType::C, 3, 1, "c")}, "J2:2"},
        {{fc(LieType::A, 5, 2, "3")}, "M21:2^2"},
        {{fc(LieType::C, 6, 1, "c")}, "G2(4):2"},
        {{fc(LieType::A, 5, 1, "3"), fc(LieType::A, 5, 1, "3")}, "U4(3):D8"},
        {{fc(LieType::D, 6, 2, "s+")}, "M12:2"},
        {{fc(LieType::A, 11, 1, "6")}, "Suz:2"},
        {{fc(LieType::D, 6, 1, "s+"), fc(LieType::D, 6, 1, "s+")}, "2^10:M12:2"},
        {{fc(LieType::D, 8, 1, "s+"), fc(LieType::D, 4, 1, "s+")}, "2^8.O8+(2).2"},
        {{fc(LieType::D, 12, 1, "s+")}, "Co1"},
    };
    for (const auto& [parts, aut] : sporadic) {
        Candidate c = make_candidate(CurrentLabel{parts});
        rows.push_back(SvoaRow{c.name(), std::to_string(c.dim32), c.c.str(), aut, false, c, {}});
    }
    return rows;
}

// ---------------------------------------------------------------- inclusion chart

struct EdgeReport {
    std::string name;
    bool contains = false;
    bool expect_contains = true;
    bool triality = false;
    bool index_ok = false;
    bool level_ok = false;
    bool fixtures_ok = true;
    std::vector<IVec> index;
    std::int64_t source_dim = 0;
    std::int64_t target_dim = 0;
    std::map<std::int64_t, std::int64_t> restricted_dims;  // irrep dim -> total multiplicity
    std::string detail;

    bool ok() const { return contains == expect_contains && index_ok && level_ok && fixtures_ok; }
};

struct ChartReport {
    std::vector<EdgeReport> edges;

    bool ok() const
    {
        return std::all_of(edges.begin(), edges.end(), [](const EdgeReport& e) { return e.ok(); });
    }
};

namespace detail {

inline FactorCurrent parse_factor(const nlohmann::json& j)
{
    const int rank = j.at("rank").get<int>();
    WZWFactor f{parse_type(j.at("type").get<std::string>(), rank), rank, j.at("level").get<int>()};
    const std::string cur = j.at("current").get<std::string>();
    if (f.type == LieType::E8) {
        if (cur != "3875" || f.level != 2)
            throw std::invalid_argument("E8 only carries the level-2 exceptional current");
        return e8_exceptional_current();
    }
    return FactorCurrent{f, f.root_system()->center.index_of(cur), false};
}

} // namespace detail

inline EdgeReport verify_edge(const nlohmann::json& e, RepCache& cache = thread_cache())
{
    EdgeReport r;
    try {
        r.name = e.at("name").get<std::string>();
        r.expect_contains = e.value("expect_contains", true);
        r.triality = e.value("triality", false);
        CurrentLabel src, tgt;
        for (const auto& f : e.at("source"))
            src.parts.push_back(detail::parse_factor(f));
        for (const auto& f : e.at("target"))
            tgt.parts.push_back(detail::parse_factor(f));

        EmbeddingSpec spec;
        spec.name = r.name;
        for (const auto& p : src.parts)
            spec.source.push_back(p.root_system());
        for (const auto& p : tgt.parts)
            spec.target.push_back(p.root_system());
        spec.projection = e.at("projection").get<std::vector<IVec>>();
        spec.expected_index = e.at("expected_index").get<std::vector<IVec>>();
        spec.validate();

        r.index = dynkin_index(spec, {}, cache);
        r.index_ok = r.index == spec.expected_index;
        r.level_ok = true;
        for (std::size_t s = 0; s < src.parts.size(); ++s) {
            int lv = 0;
            for (std::size_t t = 0; t < tgt.parts.size(); ++t)
                lv += r.index[s][t] * tgt.parts[t].factor.level;
            r.level_ok = r.level_ok && lv == src.parts[s].factor.level;
        }

        r.source_dim = src.dim();
        r.target_dim = tgt.dim();
        Decomposition dec = restrict(tgt.weights(), spec, std::max<std::int64_t>(r.target_dim, default_dim_cap), cache);
        auto it = dec.find(src.weights());
        r.contains = it != dec.end() && it->second > 0;
        for (const auto& [w, m] : dec)
            r.restricted_dims[product_dim(spec.source, w)] += m;

        if (e.contains("fixtures") && e["fixtures"].contains("restricted_dims")) {
            std::map<std::int64_t, std::int64_t> want;
            for (const auto& [d, m] : e["fixtures"]["restricted_dims"].items())
                want[std::stoll(d)] = m.get<std::int64_t>();
            r.fixtures_ok = want == r.restricted_dims;
        }
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument("malformed edge '" + r.name + "': " + ex.what());
    }
    r.detail = std::to_string(r.target_dim) + " restricts with" + (r.contains ? "" : "out") + " a " +
               std::to_string(r.source_dim) + " summand";
    return r;
}

inline ChartReport verify_inclusion_chart(const nlohmann::json& data, RepCache& cache = thread_cache())
{
    if (!data.contains("edges") || !data["edges"].is_array())
        throw std::invalid_argument("embeddings data has no edge list");
    ChartReport rep;
    for (const auto& e : data["edges"])
        rep.edges.push_back(verify_edge(e, cache));
    return rep;
}

inline nlohmann::json load_embeddings(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open embeddings file " + path);
    return nlohmann::json::parse(in);
}

} // namespace svoa
