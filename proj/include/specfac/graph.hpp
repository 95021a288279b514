#ifndef SPECFAC_GRAPH_HPP
#define SPECFAC_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "specfac/bitset.hpp"

namespace specfac {

// Simple undirected labeled graph. Adjacency is kept as per-vertex bit rows
// so that neighborhood-containment tests (N(v) ⊆ S) are word-parallel; that
// test is the inner loop of the factor checker.
//
// Graph values are treated as immutable once built: all operations below
// return fresh graphs, and the only mutator is add_edge() for construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n)
        : n_(n), row_words_((n + 63) / 64), bits_(n * row_words_, 0) {}

    std::size_t order() const { return n_; }

    bool adjacent(std::size_t u, std::size_t v) const {
        return (bits_[u * row_words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(std::size_t u, std::size_t v) {
        if (u >= n_ || v >= n_) throw std::out_of_range("add_edge: vertex out of range");
        if (u == v) throw std::invalid_argument("add_edge: loops not allowed");
        bits_[u * row_words_ + (v >> 6)] |= (std::uint64_t{1} << (v & 63));
        bits_[v * row_words_ + (u >> 6)] |= (std::uint64_t{1} << (u & 63));
    }

    void remove_edge(std::size_t u, std::size_t v) {
        bits_[u * row_words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
        bits_[v * row_words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    }

    std::size_t degree(std::size_t v) const;
    std::size_t edge_count() const;

    std::vector<std::pair<int, int>> edges() const;

    // Row view for word-parallel set operations.
    const std::uint64_t* row(std::size_t v) const { return bits_.data() + v * row_words_; }
    std::size_t row_words() const { return row_words_; }

    // N(v) ⊆ s, where s is given as packed words over the same vertex range.
    bool neighborhood_inside(std::size_t v, const DynBitset& s) const {
        const std::uint64_t* r = row(v);
        const auto& w = s.words();
        for (std::size_t i = 0; i < row_words_; ++i)
            if (r[i] & ~w[i]) return false;
        return true;
    }

    DynBitset neighborhood(std::size_t v) const {
        DynBitset out(n_);
        for (const int u : row_indices(v)) out.set(static_cast<std::size_t>(u));
        return out;
    }

    std::vector<int> row_indices(std::size_t v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    std::size_t n_ = 0;
    std::size_t row_words_ = 0;
    std::vector<std::uint64_t> bits_;
};

enum class FamilyKind { Complete, Star, Path, Cycle, Empty };

// K_n, K_{1,n-1}, P_n, C_n or the edgeless graph, labeled canonically:
// star center = vertex 0, path/cycle in index order.
Graph make_family(FamilyKind kind, std::size_t n);

// Disjoint union plus all cross edges; vertices of g1 keep indices [0, n1).
Graph join(const Graph& g1, const Graph& g2);

Graph disjoint_union(const Graph& g1, const Graph& g2);

// Induced subgraph on V \ s, reindexed order-preservingly.
Graph delete_vertices(const Graph& g, const DynBitset& s);

Graph delete_edge(const Graph& g, std::size_t u, std::size_t v);

// Number of degree-0 vertices, i(G).
std::size_t isolated_count(const Graph& g);

struct DegreeStats {
    std::size_t min_degree;
    std::size_t max_degree;
    bool connected;
    std::size_t components;
};

DegreeStats degree_stats(const Graph& g);

// Component id per vertex, ids dense in discovery order.
std::vector<int> component_ids(const Graph& g, std::size_t* count = nullptr);

bool is_connected(const Graph& g);

bool is_tree(const Graph& g);

} // namespace specfac

#endif
