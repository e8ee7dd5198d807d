#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace svoa {

// ---------------------------------------------------------------- constrained maxima of Σx³

struct ConstrainedPoint {
    Eigen::VectorXd x;
    double c1 = 0, c2 = 0, tau = 0;
    double a = 0, b = 0;  // 3x_i² = a + 2b x_i
    Eigen::VectorXd restricted_eigenvalues;  // Hessian of the Lagrangian on the tangent space
    int hessian_positive = 0, hessian_negative = 0;  // signs of 6 diag(x)

    bool restricted_negative_definite(double tol = 1e-9) const
    {
        return restricted_eigenvalues.size() == 0 || restricted_eigenvalues.maxCoeff() < -tol;
    }
    int argmax() const
    {
        Eigen::Index i;
        x.maxCoeff(&i);
        return static_cast<int>(i);
    }
};

struct MaximaReport {
    int m = 0, starts = 0;
    std::uint64_t seed = 0;
    double tol = 0;
    int converged = 0, nonconverged = 0, critical_points = 0;
    std::vector<ConstrainedPoint> maxima;
};

namespace detail {

inline double tau_of(const Eigen::VectorXd& x) { return x.array().cube().sum(); }

// Orthonormal basis (columns) of the complement of span(cols).
inline Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd& cols)
{
    const auto n = cols.rows(), k = cols.cols();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(cols);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
    return q.rightCols(n - k);
}

inline Eigen::VectorXd project_tangent(const Eigen::VectorXd& g, const Eigen::VectorXd& x)
{
    Eigen::VectorXd t = g.array() - g.mean();
    return t - (t.dot(x) / x.squaredNorm()) * x;
}

inline void retract(Eigen::VectorXd& x, double radius)
{
    x.array() -= x.mean();
    x *= radius / x.norm();
}

// Newton on 3x_i² - a - 2b x_i = 0, Σx = 0, Σx² = R². Returns false if it does not settle.
inline bool lagrange_refine(Eigen::VectorXd& x, double& a, double& b, double r2, double tol)
{
    const auto n = x.size();
    Eigen::MatrixXd ls(n, 2);
    ls.col(0).setOnes();
    ls.col(1) = 2 * x;
    Eigen::Vector2d ab = ls.colPivHouseholderQr().solve((3 * x.array().square()).matrix());
    a = ab[0];
    b = ab[1];
    const double scale = 1 + r2;
    for (int it = 0; it < 60; ++it) {
        Eigen::VectorXd f(n + 2);
        f.head(n) = 3 * x.array().square() - a - 2 * b * x.array();
        f[n] = x.sum();
        f[n + 1] = x.squaredNorm() - r2;
        if (f.cwiseAbs().maxCoeff() < tol * 1e-3 * scale)
            return true;
        Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n + 2, n + 2);
        for (Eigen::Index i = 0; i < n; ++i) {
            j(i, i) = 6 * x[i] - 2 * b;
            j(i, n) = -1;
            j(i, n + 1) = -2 * x[i];
            j(n, i) = 1;
            j(n + 1, i) = 2 * x[i];
        }
        Eigen::VectorXd d = j.fullPivLu().solve(-f);
        x += d.head(n);
        a += d[n];
        b += d[n + 1];
    }
    Eigen::VectorXd f(n + 2);
    f.head(n) = 3 * x.array().square() - a - 2 * b * x.array();
    f[n] = x.sum();
    f[n + 1] = x.squaredNorm() - r2;
    return f.cwiseAbs().maxCoeff() < tol * scale;
}

} // namespace detail

inline ConstrainedPoint classify_critical_point(const Eigen::VectorXd& x, double a, double b)
{
    ConstrainedPoint p;
    p.x = x;
    p.c1 = x.sum();
    p.c2 = x.squaredNorm();
    p.tau = detail::tau_of(x);
    p.a = a;
    p.b = b;
    const auto n = x.size();
    Eigen::MatrixXd normals(n, 2);
    normals.col(0).setOnes();
    normals.col(1) = x;
    Eigen::MatrixXd t = detail::orthogonal_complement(normals);
    Eigen::MatrixXd h = (6 * x.array() - 2 * b).matrix().asDiagonal();
    Eigen::MatrixXd ht = t.transpose() * h * t;
    p.restricted_eigenvalues = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(ht).eigenvalues();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (x[i] > 0)
            ++p.hessian_positive;
        else if (x[i] < 0)
            ++p.hessian_negative;
    }
    return p;
}

// Strict local maxima of Σx_i³ on {Σx_i = 0, Σx_i² = m(m+1)} in R^{m+1}.
inline MaximaReport find_strong_maxima(int m, int starts, double tol = 1e-8, std::uint64_t seed = 0,
                                       double dedup_tol = 1e-6)
{
    if (m < 2)
        throw std::invalid_argument("m must be at least 2");
    if (starts < 100 * (m + 1))
        throw std::invalid_argument("need at least 100(m+1) starts");
    const int n = m + 1;
    const double r2 = static_cast<double>(m) * (m + 1), radius = std::sqrt(r2);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    MaximaReport rep;
    rep.m = m;
    rep.starts = starts;
    rep.seed = seed;
    rep.tol = tol;
    std::vector<ConstrainedPoint> seen;
    const int cap = 20000;
    const double eta = 0.05 / radius;
    for (int s = 0; s < starts; ++s) {
        Eigen::VectorXd x(n);
        do {
            for (int i = 0; i < n; ++i)
                x[i] = gauss(rng);
            x.array() -= x.mean();
        } while (x.norm() < 1e-6);
        detail::retract(x, radius);
        bool settled = false;
        for (int it = 0; it < cap; ++it) {
            Eigen::VectorXd g = detail::project_tangent(3 * x.array().square().matrix(), x);
            if (g.norm() < 1e-4 * r2) {
                settled = true;
                break;
            }
            x += eta * g;
            detail::retract(x, radius);
        }
        double a = 0, b = 0;
        if (!settled || !detail::lagrange_refine(x, a, b, r2, tol)) {
            ++rep.nonconverged;
            continue;
        }
        ++rep.converged;
        bool dup = std::any_of(seen.begin(), seen.end(), [&](const ConstrainedPoint& p) {
            return (p.x - x).cwiseAbs().maxCoeff() < dedup_tol;
        });
        if (!dup)
            seen.push_back(classify_critical_point(x, a, b));
    }
    rep.critical_points = static_cast<int>(seen.size());
    for (auto& p : seen)
        if (p.restricted_negative_definite())
            rep.maxima.push_back(std::move(p));
    std::sort(rep.maxima.begin(), rep.maxima.end(), [](const ConstrainedPoint& u, const ConstrainedPoint& v) {
        return std::lexicographical_compare(v.x.data(), v.x.data() + v.x.size(), u.x.data(), u.x.data() + u.x.size());
    });
    return rep;
}

// ---------------------------------------------------------------- cubic tensors

struct CubicTensor {
    int n = 0;
    std::vector<double> data;

    CubicTensor() = default;
    explicit CubicTensor(int dim) : n(dim), data(static_cast<std::size_t>(dim) * dim * dim, 0.0)
    {
        if (dim < 1)
            throw std::invalid_argument("tensor dimension must be positive");
    }

    double& operator()(int p, int q, int r) { return data[(static_cast<std::size_t>(p) * n + q) * n + r]; }
    double operator()(int p, int q, int r) const { return data[(static_cast<std::size_t>(p) * n + q) * n + r]; }

    bool is_symmetric(double tol = 1e-12) const
    {
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int r = 0; r < n; ++r) {
                    double v = (*this)(p, q, r);
                    if (std::abs(v - (*this)(q, p, r)) > tol || std::abs(v - (*this)(p, r, q)) > tol)
                        return false;
                }
        return true;
    }

    CubicTensor scaled(double s) const
    {
        CubicTensor t = *this;
        for (auto& v : t.data)
            v *= s;
        return t;
    }

    // Components in the orthonormal basis given by the columns of q.
    CubicTensor rotated(const Eigen::MatrixXd& q) const
    {
        if (q.rows() != n || q.cols() != n)
            throw std::invalid_argument("basis size mismatch");
        // contract one index at a time
        auto step = [&](const std::vector<double>& in) {
            std::vector<double> out(in.size(), 0.0);
            // out[a][q][r] = Σ_p Q_pa in[p][q][r], then cycle indices
            for (int a = 0; a < n; ++a)
                for (int p = 0; p < n; ++p) {
                    double c = q(p, a);
                    if (c == 0)
                        continue;
                    for (int qr = 0; qr < n * n; ++qr)
                        out[static_cast<std::size_t>(a) * n * n + qr] += c * in[static_cast<std::size_t>(p) * n * n + qr];
                }
            // cycle (a, q, r) -> (q, r, a)
            std::vector<double> cyc(in.size());
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        cyc[(static_cast<std::size_t>(b) * n + c) * n + a] = out[(static_cast<std::size_t>(a) * n + b) * n + c];
            return cyc;
        };
        CubicTensor t(n);
        t.data = step(step(step(data)));
        return t;
    }

    template <class Rng>
    static CubicTensor random_symmetric(int dim, Rng& rng)
    {
        std::normal_distribution<double> g(0.0, 1.0);
        CubicTensor t(dim);
        for (int p = 0; p < dim; ++p)
            for (int q = p; q < dim; ++q)
                for (int r = q; r < dim; ++r) {
                    double v = g(rng);
                    int idx[3] = {p, q, r};
                    std::sort(idx, idx + 3);
                    do {
                        t(idx[0], idx[1], idx[2]) = v;
                    } while (std::next_permutation(idx, idx + 3));
                }
        return t;
    }
};

// Orthonormal basis (columns, (m+1) x m) of the hyperplane Σx_i = 0.
inline Eigen::MatrixXd hyperplane_basis(int m)
{
    if (m < 1)
        throw std::invalid_argument("m must be positive");
    return detail::orthogonal_complement(Eigen::VectorXd::Ones(m + 1));
}

// τ_pqr = 6 Σ_i u_ip u_iq u_ir, i.e. τ(y) = Σ_i x_i³ with x = U y.
inline CubicTensor hyperplane_cubic_tensor(int m)
{
    Eigen::MatrixXd u = hyperplane_basis(m);
    CubicTensor t(m);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            for (int r = 0; r < m; ++r) {
                double s = 0;
                for (int i = 0; i <= m; ++i)
                    s += u(i, p) * u(i, q) * u(i, r);
                t(p, q, r) = 6 * s;
            }
    return t;
}

// Unit direction in hyperplane coordinates pointing at the vertex (-1,..,m,..,-1).
inline Eigen::VectorXd hyperplane_vertex_direction(int m, int vertex = 0)
{
    if (vertex < 0 || vertex > m)
        throw std::out_of_range("vertex index");
    Eigen::VectorXd x = Eigen::VectorXd::Constant(m + 1, -1.0);
    x[vertex] = m;
    Eigen::VectorXd y = hyperplane_basis(m).transpose() * x;
    return y / y.norm();
}

struct IdentityCheck {
    bool pass = false;
    double lambda = 0;    // contraction = -λ (δ_ps δ_qt - δ_pt δ_qs)
    double residual = 0;  // max |contraction + λ(δδ - δδ)|
};

inline IdentityCheck check_superconformal_identity(const CubicTensor& tau, double tol = 1e-8)
{
    if (!tau.is_symmetric(1e-10))
        throw std::invalid_argument("tensor is not symmetric");
    const int n = tau.n;
    // M[(p,s)][(q,t)] = Σ_r τ_rps τ_rqt
    Eigen::MatrixXd a(n * n, n);
    for (int p = 0; p < n; ++p)
        for (int s = 0; s < n; ++s)
            for (int r = 0; r < n; ++r)
                a(p * n + s, r) = tau(r, p, s);
    Eigen::MatrixXd mm = a * a.transpose();
    auto contraction = [&](int p, int q, int s, int t) { return mm(p * n + s, q * n + t) - mm(p * n + t, q * n + s); };
    auto delta = [](int i, int j) { return i == j ? 1.0 : 0.0; };
    double cd = 0, dd = 0;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    double d = delta(p, s) * delta(q, t) - delta(p, t) * delta(q, s);
                    cd += contraction(p, q, s, t) * d;
                    dd += d * d;
                }
    IdentityCheck out;
    out.lambda = dd > 0 ? -cd / dd : 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    double d = delta(p, s) * delta(q, t) - delta(p, t) * delta(q, s);
                    out.residual = std::max(out.residual, std::abs(contraction(p, q, s, t) + out.lambda * d));
                }
    out.pass = n >= 2 && out.lambda > tol && out.residual < tol * std::max(1.0, out.lambda);
    return out;
}

struct SecondOrderReport {
    double lambda = 0;
    double tau0 = 0;               // τ_000 / 6 after normalising λ = 1
    double gradient_residual = 0;  // max |τ^(1)|
    double tau2_expected = 0;      // 3τ0 - sqrt(1 + 9τ0²)
    double tau2_min = 0, tau2_max = 0;
    double scalar_deviation = 0;   // max |τ^(2) - expected·1|
    double trace_residual = 0;     // |τ_0pp|
    double trace_formula_residual = 0;  // |6τ0 + (n-1)·expected|
    bool pass = false;
};

inline SecondOrderReport check_second_order_relation(const CubicTensor& tau, const Eigen::VectorXd& e0,
                                                     double tol = 1e-8)
{
    const int n = tau.n;
    if (e0.size() != n)
        throw std::invalid_argument("direction size mismatch");
    if (std::abs(e0.norm() - 1) > 1e-6)
        throw std::invalid_argument("direction is not a unit vector");
    auto id = check_superconformal_identity(tau, tol);
    if (!id.pass)
        throw std::invalid_argument("tensor does not satisfy the superconformal identity");
    CubicTensor t1 = tau.scaled(1 / std::sqrt(id.lambda));

    Eigen::MatrixXd basis(n, n);
    basis.col(0) = e0;
    if (n > 1)
        basis.rightCols(n - 1) = detail::orthogonal_complement(e0);
    CubicTensor t = t1.rotated(basis);

    SecondOrderReport r;
    r.lambda = id.lambda;
    r.tau0 = t(0, 0, 0) / 6;
    for (int i = 1; i < n; ++i)
        r.gradient_residual = std::max(r.gradient_residual, std::abs(t(0, 0, i) / 2));
    if (r.gradient_residual > tol)
        throw std::domain_error("direction is not a critical point of the cubic");
    Eigen::MatrixXd t2(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            t2(i - 1, j - 1) = t(0, i, j);
    Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(t2).eigenvalues();
    r.tau2_min = ev.minCoeff();
    r.tau2_max = ev.maxCoeff();
    if (r.tau2_max - 3 * r.tau0 > tol)
        throw std::domain_error("direction is not a maximum of the cubic");
    r.tau2_expected = 3 * r.tau0 - std::sqrt(1 + 9 * r.tau0 * r.tau0);
    r.scalar_deviation = (t2 - r.tau2_expected * Eigen::MatrixXd::Identity(n - 1, n - 1)).cwiseAbs().maxCoeff();
    double tr = t(0, 0, 0);
    for (int i = 1; i < n; ++i)
        tr += t(0, i, i);
    r.trace_residual = std::abs(tr);
    r.trace_formula_residual = std::abs(6 * r.tau0 + (n - 1) * r.tau2_expected);
    r.pass = r.scalar_deviation < tol && r.trace_residual < tol && r.trace_formula_residual < tol;
    return r;
}

} // namespace svoa
