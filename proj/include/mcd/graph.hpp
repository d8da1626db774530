#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mcd/errors.hpp"

namespace mcd {

// Soft cap of the exact toolkit: adjacency lives in one 64-bit word per vertex.
inline constexpr int kVertexCap = 64;

// An undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on labelled vertices 0..n-1, immutable after
// construction. Adjacency is a bitset per vertex; the edge list is kept in
// lexicographic (u,v) order and doubles as the edge index space used by
// colourings, covers and LP weight vectors.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;
    std::uint64_t neighbours(int v) const;
    int degree(int v) const;

    // All edges in lexicographic order; position in this list is the edge index.
    const std::vector<Edge>& edges() const { return edges_; }
    // Index of (u,v) in edges(), or -1 if the edge is absent.
    int edge_index(int u, int v) const;

    // Spanning subgraph with the given edges removed (absent edges ignored).
    Graph remove_edges(const std::vector<Edge>& removed) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<Edge> edges_;
    std::vector<int> edge_index_; // n*n lookup, -1 where no edge
};

Graph complete_graph(int n);

// Complete p-partite graph with class sizes as equal as possible; classes are
// assigned round-robin by vertex label (vertex v is in class v mod p), so the
// ceil(n/p)-sized classes come first.
Graph turan_graph(int n, int parts);

// Edge count of turan_graph(n, parts), by the class-size formula. Valid for
// any n >= 0, including above the vertex cap.
std::int64_t turan_number(std::int64_t n, std::int64_t parts);

// graph6 text encoding (bit-exact per the published format; short form for
// n <= 62, long form above that up to the vertex cap).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

} // namespace mcd
