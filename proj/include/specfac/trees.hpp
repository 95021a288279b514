#ifndef SPECFAC_TREES_HPP
#define SPECFAC_TREES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "specfac/bitset.hpp"
#include "specfac/family.hpp"
#include "specfac/graph.hpp"

namespace specfac {

// Canonical form of a free tree on n <= 12 vertices, packed as the 2n-bit
// parenthesis string of the AHU encoding rooted at the center (the smaller
// of the two encodings when the tree is bicentral). '(' = 1, ')' = 0,
// most significant bit first.
std::uint64_t tree_canon_code(const Graph& t);

// Rebuild the canonically labeled tree from its code: root = 0, children in
// encoding order, preorder labels.
Graph tree_from_canon_code(std::uint64_t code, std::size_t n);

// One representative per isomorphism class of trees on n vertices, ordered
// by descending degree sequence then canonical code. 1 <= n <= 12.
std::vector<Graph> enumerate_trees(std::size_t n);

// The two underlying generators, kept as permanent mutual oracles.
std::vector<std::uint64_t> tree_codes_prufer(std::size_t n);     // n <= 10
std::vector<std::uint64_t> tree_codes_levelseq(std::size_t n);   // n <= 12

struct EdgeWitness {
    std::pair<int, int> edge;
    DynBitset s_star;              // r*i((T-e)-S*) > k*|S*|
};

struct TreeClassification {
    bool member = false;
    std::optional<DynBitset> violation_a;                 // S with r*i(T-S) > k*|S|
    std::optional<std::pair<int, int>> nonwitnessed_edge; // e with no S* for T-e
    std::vector<EdgeWitness> edge_witnesses;              // verbose mode only
};

// Membership in T_{k/r}: (a) r*i(T-S) <= k*|S| for every S ⊂ V(T), and
// (b) every edge deletion admits a violating S*. Both subset quantifiers
// range over proper subsets with the empty set included; S* is searched on
// the two-component forest T-e under the original labels. Quantifiers run
// through the pruned independent-set search. Pre: t is a tree, n <= 20.
TreeClassification in_tree_family(const Graph& t, const FamilyParams& p,
                                  bool verbose = false);

} // namespace specfac

#endif
