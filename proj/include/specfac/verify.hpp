#ifndef SPECFAC_VERIFY_HPP
#define SPECFAC_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specfac/extremal.hpp"
#include "specfac/factor.hpp"
#include "specfac/family.hpp"
#include "specfac/graph.hpp"
#include "specfac/spectra.hpp"

namespace specfac {

// One recorded comparison. `holds` always re-derives from (lhs, relation, rhs);
// informational steps are reported but excluded from the overall verdict
// (used for the alternate-expansion step, which can fail near the threshold).
struct Step {
    std::string description;
    double lhs = 0.0;
    std::string relation;   // "<", "<=", ">", ">=", "=="
    double rhs = 0.0;
    bool holds = false;
    bool boundary = false;      // lhs and rhs within the gap tolerance
    bool informational = false;
};

struct VerificationReport {
    std::string mode;
    std::int64_t n = 0, delta = 0, k = 0, r = 0, s = 0;
    std::vector<Step> steps;
    bool overall = true;   // conjunction over non-informational steps
    // instance verdicts: pass | fail | not-applicable | boundary
    std::string outcome = "pass";
    std::optional<std::string> counterexample_graph6;
    std::optional<Certificate> counterexample_certificate;
};

// Recompute every step's flag from its stored operands.
bool revalidate(const VerificationReport& report);

// Numeric replay of the adjacency-side chain: Hong bound on G_1(s), the
// exact-integer f-chain, the expansion-residual check, and the final strict
// inequality rho(G_1(s)) < (rn - k*delta - 2r)/r.
VerificationReport chain_check_adjacency(std::int64_t n, std::int64_t delta,
                                         const FamilyParams& p, std::int64_t s,
                                         double tol = kDefaultEigTol,
                                         double gap = kDefaultGapTol);

// The q-side chain with the Das bound and g(s).
VerificationReport chain_check_q(std::int64_t n, std::int64_t delta,
                                 const FamilyParams& p, std::int64_t s,
                                 double tol = kDefaultEigTol,
                                 double gap = kDefaultGapTol);

// rho/q separation of G_1(delta) from every G_1(s), s in [delta+1, rn/(k+r)),
// plus the proper-subgraph strictness rho* > n - ⌊k delta/r⌋ - 2 (and doubled
// for q). The q side is included only for n at or above its own threshold.
// Pre: n >= the adjacency-side minimal order.
VerificationReport separation_scan(std::int64_t n, std::int64_t delta,
                                   const FamilyParams& p,
                                   double tol = kDefaultEigTol,
                                   double gap = kDefaultGapTol);

enum class MatrixChoice { Adjacency, SignlessLaplacian };

// One-directional check of the spectral sufficient condition on a concrete
// graph: when the hypothesis holds, the graph must have the factor or be
// G_1(delta) itself. Hypothesis comparisons use a two-sided band; instances
// inside it are reported as "boundary" and never counted as failures.
VerificationReport verify_theorem_instance(const Graph& g, std::int64_t delta,
                                           const FamilyParams& p, MatrixChoice which,
                                           double tol = kDefaultEigTol,
                                           double band = 1e-9);

// Connected graph with minimum degree exactly delta: random spanning tree,
// random fill to a seed-drawn edge count, then degree repair with a
// reject-and-retry loop. Byte-exact reproducible for a fixed seed.
Graph random_connected_graph(std::size_t n, std::size_t delta, std::uint64_t seed);

} // namespace specfac

#endif
