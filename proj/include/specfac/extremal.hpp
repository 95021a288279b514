#ifndef SPECFAC_EXTREMAL_HPP
#define SPECFAC_EXTREMAL_HPP

#include <cstdint>

#include "specfac/family.hpp"
#include "specfac/graph.hpp"
#include "specfac/rational.hpp"

namespace specfac {

// Parameters of G_1 = K_s ∨ (K_{n-⌊ks/r⌋-s-1} ∪ (⌊ks/r⌋+1) K_1).
struct ExtremalSpec {
    std::int64_t n = 0;
    std::int64_t s = 0;
    FamilyParams family;

    std::int64_t floor_ks_over_r() const { return family.k * s / family.r; }
    std::int64_t clique_part() const { return n - floor_ks_over_r() - s - 1; }
    std::int64_t isolated_part() const { return floor_ks_over_r() + 1; }
    bool valid() const { return n >= 0 && s >= 0 && clique_part() >= 0; }

    // e(G_1) = C(n - ⌊ks/r⌋ - 1, 2) + s (⌊ks/r⌋ + 1)
    std::int64_t edge_count() const {
        const std::int64_t t = n - floor_ks_over_r() - 1;
        return t * (t - 1) / 2 + s * isolated_part();
    }
};

// Labeled construction: separator first, clique next, isolated vertices last.
// A zero clique part degenerates to K_s ∨ (⌊ks/r⌋+1)K_1.
Graph build_extremal(const ExtremalSpec& spec);

// Order threshold of the adjacency-radius sufficient condition:
// max{ (k+r)(k+2r)(kδ+k+r) / (k²r),
//      (2krδ² + (2k²+kr+2r²)δ + k² + 3kr - 2r²) / (2r(k-r)) }
Rat threshold_A(std::int64_t delta, const FamilyParams& p);

// Order threshold of the signless-Laplacian condition:
// max{ same first term,
//      ((k²+2kr)δ² + (2k²+3kr+2r²)δ + k² + 3kr) / (2r(k-r)) }
Rat threshold_Q(std::int64_t delta, const FamilyParams& p);

// Least integer order admissible for each condition (n >= threshold).
std::int64_t min_order_A(std::int64_t delta, const FamilyParams& p);
std::int64_t min_order_Q(std::int64_t delta, const FamilyParams& p);

// Proof quadratics, exact integer evaluation.
// f(s) = (k²+2kr)s² - (2krn-2r²-kr)s + r²n² - 2r²n + r²
std::int64_t f_value(std::int64_t s, std::int64_t n, std::int64_t k, std::int64_t r);
// g(s) = (k²+2kr)s² - (2krn-kr-2r²)s + 2r²n² - 4r²n + 2r²
std::int64_t g_value(std::int64_t s, std::int64_t n, std::int64_t k, std::int64_t r);

// Alternate expansions of f(δ+1) and g(δ+1) around the leading square
// (rn - kδ - 2r)², as used by the inequality chains. The f-form carries a
// constant defect of exactly r² against direct evaluation on every input;
// the g-form is an exact identity. The chain replays assert both facts.
std::int64_t f_alt_expansion(std::int64_t delta, std::int64_t n, std::int64_t k,
                             std::int64_t r);
std::int64_t g_alt_expansion(std::int64_t delta, std::int64_t n, std::int64_t k,
                             std::int64_t r);

} // namespace specfac

#endif
