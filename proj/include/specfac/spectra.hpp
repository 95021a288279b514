#ifndef SPECFAC_SPECTRA_HPP
#define SPECFAC_SPECTRA_HPP

#include <vector>

#include "specfac/graph.hpp"

namespace specfac {

inline constexpr double kDefaultEigTol = 1e-10;
inline constexpr double kDefaultGapTol = 1e-6;

enum class SpectralMethod { PowerShifted, JacobiFull };

struct SpectralEstimate {
    double value = 0.0;
    double residual = 0.0;      // inf-norm of M x - value x for the returned vector
    int iterations = 0;
    SpectralMethod method = SpectralMethod::PowerShifted;
};

// Largest eigenvalue of A(G). Power iteration runs on A + I so that the
// ±rho oscillation of bipartite graphs cannot stall it; the shift is
// subtracted from the reported value. Disconnected inputs are handled per
// component, max-aggregated. Falls back to a full cyclic-Jacobi solve when
// the iteration cap (100 n + 1000) is reached.
SpectralEstimate adjacency_spectral_radius(const Graph& g, double tol = kDefaultEigTol);

// Largest eigenvalue of Q(G) = D(G) + A(G), same scheme.
SpectralEstimate signless_laplacian_spectral_radius(const Graph& g, double tol = kDefaultEigTol);

struct HongBound {
    bool applicable = true;       // false when isolated vertices void the bound
    double bound = 0.0;           // sqrt(2 e(G) - n + 1)
    bool equality_predicted = false;   // G is a star or a complete graph
};

HongBound hong_bound(const Graph& g);

// 2 e(G) / (n-1) + n - 2, n >= 2
double das_bound(const Graph& g);

bool is_complete_graph(const Graph& g);
bool is_star_graph(const Graph& g);

namespace spectra_detail {

enum class MatrixKind { Adjacency, SignlessLaplacian };

// Forced-method routes kept for the method-agreement suites.
SpectralEstimate largest_eigenvalue_power(const Graph& g, MatrixKind kind, double tol);
SpectralEstimate largest_eigenvalue_jacobi(const Graph& g, MatrixKind kind);

// Dominant eigenpair of a connected graph, inf-normalized vector
// (Perron–Frobenius checks).
struct EigPair {
    double value;
    std::vector<double> vector;
};
EigPair dominant_eigenpair(const Graph& g, MatrixKind kind, double tol);

} // namespace spectra_detail

} // namespace specfac

#endif
