#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcd/graph.hpp"

namespace mcd {

// Total assignment of colours 1..k to the edges of a graph. Colour classes
// partition the edge set by construction.
class EdgeColouring {
public:
    // `colours` is aligned with graph.edges(); every entry must be in 1..k.
    EdgeColouring(Graph graph, int k, std::vector<int> colours);

    const Graph& graph() const { return graph_; }
    int colour_count() const { return k_; }

    int colour_at(int edge_idx) const;
    int colour_of(int u, int v) const; // throws invalid_argument if the edge is absent
    const std::vector<int>& colours() const { return colours_; }

    // Spanning subgraph with exactly the colour-i edges.
    Graph colour_class(int colour) const;

    bool operator==(const EdgeColouring&) const = default;

private:
    Graph graph_;
    int k_ = 1;
    std::vector<int> colours_;
};

// The tuple (K_{r_1},...,K_{r_k}) as a nondecreasing sequence of clique
// sizes, each >= 3. The optional Ramsey value is only ever filled from the
// known-values table (see mcd/ramsey.hpp).
class CliqueProfile {
public:
    explicit CliqueProfile(std::vector<int> sizes);

    int colour_count() const { return static_cast<int>(sizes_.size()); }
    int clique_size(int colour) const; // colour in 1..k
    const std::vector<int>& sizes() const { return sizes_; }

    const std::optional<int>& ramsey() const { return ramsey_; }
    void set_ramsey_from_table(int value) { ramsey_ = value; }

    bool operator==(const CliqueProfile& o) const { return sizes_ == o.sizes_; }

private:
    std::vector<int> sizes_;
    std::optional<int> ramsey_;
};

// Complete multipartite colouring obtained by replacing vertex j of the base
// complete graph with an independent class of sizes[j] vertices (classes take
// contiguous label blocks); each cross edge inherits the base colour of its
// class pair. Rejects a non-complete base.
EdgeColouring blow_up(const EdgeColouring& base, const std::vector<int>& sizes);

// Text format for colourings: a header line "n k" followed by one line
// "u v c" per edge. The listed edges define the host graph.
EdgeColouring parse_colouring(std::istream& in);
EdgeColouring parse_colouring(std::string_view text);
std::string write_colouring(const EdgeColouring& c);

} // namespace mcd
