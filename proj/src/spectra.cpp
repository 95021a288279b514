#include "specfac/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specfac {

namespace {

using spectra_detail::MatrixKind;

struct SymMat {
    std::size_t n = 0;
    std::vector<double> a;   // row-major, symmetric

    explicit SymMat(std::size_t n_) : n(n_), a(n_ * n_, 0.0) {}
    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// dense matrix of the induced subgraph on `verts`, plus `shift` on the diagonal
SymMat build_matrix(const Graph& g, const std::vector<int>& verts, MatrixKind kind,
                    double shift) {
    const std::size_t m = verts.size();
    SymMat mat(m);
    for (std::size_t i = 0; i < m; ++i) {
        mat.at(i, i) = shift;
        if (kind == MatrixKind::SignlessLaplacian)
            mat.at(i, i) += static_cast<double>(g.degree(static_cast<std::size_t>(verts[i])));
        for (std::size_t j = i + 1; j < m; ++j)
            if (g.adjacent(static_cast<std::size_t>(verts[i]), static_cast<std::size_t>(verts[j])))
                mat.at(i, j) = mat.at(j, i) = 1.0;
    }
    return mat;
}

struct PowerResult {
    bool converged = false;
    double value = 0.0;        // of the shifted matrix
    double residual = 0.0;
    int iterations = 0;
    std::vector<double> x;
};

// Power iteration from the all-ones vector; the start vector has positive
// overlap with the Perron vector of any connected nonnegative matrix.
PowerResult power_iteration(const SymMat& m, double tol) {
    const std::size_t n = m.n;
    PowerResult res;
    res.x.assign(n, 1.0);
    std::vector<double> y(n, 0.0);
    const int cap = static_cast<int>(100 * n + 1000);
    for (int it = 1; it <= cap; ++it) {
        double xx = 0.0, xy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += m.at(i, j) * res.x[j];
            y[i] = s;
            xx += res.x[i] * res.x[i];
            xy += res.x[i] * s;
        }
        const double lambda = xy / xx;
        double resid = 0.0, ymax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            resid = std::max(resid, std::fabs(y[i] - lambda * res.x[i]));
            ymax = std::max(ymax, std::fabs(y[i]));
        }
        res.iterations = it;
        if (resid <= tol) {
            res.converged = true;
            res.value = lambda;
            res.residual = resid;
            return res;
        }
        if (ymax == 0.0) {   // zero matrix
            res.converged = true;
            res.value = 0.0;
            res.residual = 0.0;
            return res;
        }
        for (std::size_t i = 0; i < n; ++i) res.x[i] = y[i] / ymax;
    }
    return res;
}

// Cyclic Jacobi with the usual small-rotation threshold schedule.
// Eigenvalues land on the diagonal; v accumulates eigenvectors as columns.
int jacobi_eigensolve(SymMat& a, SymMat& v) {
    const std::size_t n = a.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v.at(i, j) = (i == j) ? 1.0 : 0.0;
    int sweeps = 0;
    for (; sweeps < 100; ++sweeps) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::fabs(a.at(p, q));
        if (off == 0.0) break;
        const double thresh = (sweeps < 3) ? 0.2 * off / static_cast<double>(n * n) : 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                const double g = 100.0 * std::fabs(apq);
                if (sweeps > 4 && std::fabs(a.at(p, p)) + g == std::fabs(a.at(p, p)) &&
                    std::fabs(a.at(q, q)) + g == std::fabs(a.at(q, q))) {
                    a.at(p, q) = a.at(q, p) = 0.0;
                    continue;
                }
                if (std::fabs(apq) <= thresh) continue;
                const double h = a.at(q, q) - a.at(p, p);
                double t;
                if (std::fabs(h) + g == std::fabs(h)) {
                    t = apq / h;
                } else {
                    const double theta = 0.5 * h / apq;
                    t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double hpq = t * apq;
                a.at(p, p) -= hpq;
                a.at(q, q) += hpq;
                a.at(p, q) = a.at(q, p) = 0.0;
                auto rotate = [&](SymMat& m, std::size_t i, std::size_t j,
                                  std::size_t k, std::size_t l) {
                    const double gij = m.at(i, j), gkl = m.at(k, l);
                    m.at(i, j) = gij - s * (gkl + gij * tau);
                    m.at(k, l) = gkl + s * (gij - gkl * tau);
                };
                for (std::size_t j = 0; j < p; ++j) {
                    rotate(a, j, p, j, q);
                    a.at(p, j) = a.at(j, p);
                    a.at(q, j) = a.at(j, q);
                }
                for (std::size_t j = p + 1; j < q; ++j) {
                    rotate(a, p, j, j, q);
                    a.at(j, p) = a.at(p, j);
                    a.at(q, j) = a.at(j, q);
                }
                for (std::size_t j = q + 1; j < n; ++j) {
                    rotate(a, p, j, q, j);
                    a.at(j, p) = a.at(p, j);
                    a.at(j, q) = a.at(q, j);
                }
                for (std::size_t j = 0; j < n; ++j) rotate(v, j, p, j, q);
            }
        }
    }
    return sweeps;
}

SpectralEstimate jacobi_estimate(const Graph& g, const std::vector<int>& verts,
                                 MatrixKind kind) {
    SymMat m = build_matrix(g, verts, kind, 0.0);
    SymMat work = m;
    SymMat v(m.n);
    const int sweeps = jacobi_eigensolve(work, v);
    std::size_t best = 0;
    for (std::size_t i = 1; i < m.n; ++i)
        if (work.at(i, i) > work.at(best, best)) best = i;
    const double lambda = work.at(best, best);
    double xmax = 0.0;
    for (std::size_t i = 0; i < m.n; ++i) xmax = std::max(xmax, std::fabs(v.at(i, best)));
    double resid = 0.0;
    for (std::size_t i = 0; i < m.n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.n; ++j) s += m.at(i, j) * v.at(j, best);
        resid = std::max(resid, std::fabs(s - lambda * v.at(i, best)) / (xmax > 0 ? xmax : 1.0));
    }
    return SpectralEstimate{lambda, resid, sweeps, SpectralMethod::JacobiFull};
}

SpectralEstimate estimate_component(const Graph& g, const std::vector<int>& verts,
                                    MatrixKind kind, double tol) {
    SymMat m = build_matrix(g, verts, kind, 1.0);
    PowerResult pr = power_iteration(m, tol);
    if (pr.converged)
        return SpectralEstimate{pr.value - 1.0, pr.residual, pr.iterations,
                                SpectralMethod::PowerShifted};
    return jacobi_estimate(g, verts, kind);
}

SpectralEstimate spectral_radius(const Graph& g, MatrixKind kind, double tol) {
    if (g.order() == 0)
        throw std::invalid_argument("spectral radius: empty graph");
    if (tol <= 0.0) throw std::invalid_argument("spectral radius: tol must be positive");
    std::size_t ncomp = 0;
    std::vector<int> comp = component_ids(g, &ncomp);
    SpectralEstimate best;
    bool first = true;
    for (std::size_t c = 0; c < ncomp; ++c) {
        std::vector<int> verts;
        for (std::size_t v = 0; v < g.order(); ++v)
            if (comp[v] == static_cast<int>(c)) verts.push_back(static_cast<int>(v));
        SpectralEstimate est = estimate_component(g, verts, kind, tol);
        if (first || est.value > best.value) {
            best = est;
            first = false;
        }
    }
    return best;
}

} // namespace

SpectralEstimate adjacency_spectral_radius(const Graph& g, double tol) {
    return spectral_radius(g, MatrixKind::Adjacency, tol);
}

SpectralEstimate signless_laplacian_spectral_radius(const Graph& g, double tol) {
    return spectral_radius(g, MatrixKind::SignlessLaplacian, tol);
}

bool is_complete_graph(const Graph& g) {
    const std::size_t n = g.order();
    return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_star_graph(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 2 || g.edge_count() != n - 1) return false;
    std::size_t maxd = 0;
    for (std::size_t v = 0; v < n; ++v) maxd = std::max(maxd, g.degree(v));
    return maxd == n - 1;
}

HongBound hong_bound(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("hong_bound: empty graph");
    HongBound hb;
    const double radicand = 2.0 * static_cast<double>(g.edge_count()) -
                            static_cast<double>(g.order()) + 1.0;
    // the bound needs minimum degree >= 1; isolated vertices break it even
    // when the radicand stays nonnegative (K_2 ∪ K_1 has rho = 1 > 0)
    if (radicand < 0.0 || (g.order() > 1 && isolated_count(g) > 0)) {
        hb.applicable = false;
        return hb;
    }
    hb.bound = std::sqrt(radicand);
    hb.equality_predicted = is_star_graph(g) || is_complete_graph(g);
    return hb;
}

double das_bound(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("das_bound: needs n >= 2");
    const double n = static_cast<double>(g.order());
    return 2.0 * static_cast<double>(g.edge_count()) / (n - 1.0) + n - 2.0;
}

namespace spectra_detail {

SpectralEstimate largest_eigenvalue_power(const Graph& g, MatrixKind kind, double tol) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    std::size_t ncomp = 0;
    std::vector<int> comp = component_ids(g, &ncomp);
    SpectralEstimate best;
    bool first = true;
    for (std::size_t c = 0; c < ncomp; ++c) {
        std::vector<int> verts;
        for (std::size_t v = 0; v < g.order(); ++v)
            if (comp[v] == static_cast<int>(c)) verts.push_back(static_cast<int>(v));
        SymMat m = build_matrix(g, verts, kind, 1.0);
        PowerResult pr = power_iteration(m, tol);
        if (!pr.converged)
            throw std::runtime_error("power iteration did not converge within the cap");
        SpectralEstimate est{pr.value - 1.0, pr.residual, pr.iterations,
                             SpectralMethod::PowerShifted};
        if (first || est.value > best.value) {
            best = est;
            first = false;
        }
    }
    return best;
}

SpectralEstimate largest_eigenvalue_jacobi(const Graph& g, MatrixKind kind) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    std::vector<int> verts(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) verts[v] = static_cast<int>(v);
    return jacobi_estimate(g, verts, kind);
}

EigPair dominant_eigenpair(const Graph& g, MatrixKind kind, double tol) {
    if (!is_connected(g) || g.order() == 0)
        throw std::invalid_argument("dominant_eigenpair: connected graph required");
    std::vector<int> verts(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) verts[v] = static_cast<int>(v);
    SymMat m = build_matrix(g, verts, kind, 1.0);
    PowerResult pr = power_iteration(m, tol);
    if (!pr.converged)
        throw std::runtime_error("power iteration did not converge within the cap");
    double xmax = 0.0;
    for (double xi : pr.x) xmax = std::max(xmax, std::fabs(xi));
    for (double& xi : pr.x) xi /= xmax;
    return EigPair{pr.value - 1.0, std::move(pr.x)};
}

} // namespace spectra_detail

} // namespace specfac
