#pragma once

#include <cstdint>
#include <vector>

#include "mcd/graph.hpp"

namespace mcd {

// An r-clique of a host graph, identified by its vertex set.
struct Clique {
    std::uint64_t vertex_mask = 0;

    int size() const;
    std::vector<int> vertices() const;          // ascending
    std::vector<Edge> edge_pairs() const;       // all pairs, lexicographic
    bool is_clique_of(const Graph& g) const;    // vertices induce a complete subgraph

    auto operator<=>(const Clique&) const = default;
};

// Every r-clique of g exactly once, in lexicographic vertex-set order.
// r > n yields the empty list; r = 2 yields the edges.
std::vector<Clique> enumerate_cliques(const Graph& g, int r);

// Same, but throws CapError as soon as more than `cap` cliques are found.
std::vector<Clique> enumerate_cliques(const Graph& g, int r, std::size_t cap);

// True iff g has no r-clique; early exit, no list materialized.
bool is_kr_free(const Graph& g, int r);

} // namespace mcd
