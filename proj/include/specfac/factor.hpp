#ifndef SPECFAC_FACTOR_HPP
#define SPECFAC_FACTOR_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "specfac/bitset.hpp"
#include "specfac/family.hpp"
#include "specfac/graph.hpp"

namespace specfac {

// A vertex set S witnessing i(G-S) > (k/r)|S|, cleared of fractions:
// lhs = r * i(G-S), rhs = k * |S|, lhs > rhs in exact integers.
struct Certificate {
    DynBitset s;
    DynBitset isolated;       // the isolated vertices of G-S
    std::int64_t lhs = 0;     // r * |isolated|
    std::int64_t rhs = 0;     // k * |s|
};

enum class Strategy { Naive, Pruned };

// Searches for S ⊂ V(G) with r*i(G-S) > k*|S|. S ranges over proper subsets
// with S = ∅ included (violated exactly when G has isolated vertices); S =
// V(G) can never violate and is skipped. The naive strategy loops over all
// 2^n subsets (n <= 24); the pruned one enumerates independent sets I and
// tests S = N(I), which is sufficient: the isolated vertices of a violating
// G-S form such an I with N(I) ⊆ S. The returned certificate has minimum |S|,
// ties broken by lexicographically least S.
std::optional<Certificate> wolf_violation(const Graph& g, const FamilyParams& p,
                                          Strategy strategy = Strategy::Pruned);

struct FactorVerdict {
    bool has_factor;
    std::optional<Certificate> certificate;   // present iff !has_factor
};

// Wolf criterion: the factor exists iff no subset violates.
FactorVerdict has_factor(const Graph& g, const FamilyParams& p,
                         Strategy strategy = Strategy::Pruned);

struct FactorWitness {
    struct Block {
        enum class Kind { Cycle, Tree };
        Kind kind;
        std::vector<int> vertices;                   // ascending original labels
        std::vector<std::pair<int, int>> edges;      // spanning cycle or member tree
    };
    std::vector<Block> blocks;
};

// Independent oracle: exact-cover DP over vertex subsets, each block spanned
// by an allowed odd cycle or by a spanning tree passing the family test.
// Spanning trees are enumerated by contract/delete recursion, capped at
// 10,000 trees per block; an undecided block past the cap aborts the search.
// Pre: n <= 10.
std::optional<FactorWitness> brute_force_factor(const Graph& g, const FamilyParams& p);

// Recompute-and-check helpers used by the test suites.
bool validate_certificate(const Graph& g, const FamilyParams& p, const Certificate& c);
bool validate_witness(const Graph& g, const FamilyParams& p, const FactorWitness& w);

} // namespace specfac

#endif
