#include "mcd/colouring.hpp"

#include <algorithm>
#include <sstream>

namespace mcd {

EdgeColouring::EdgeColouring(Graph graph, int k, std::vector<int> colours)
    : graph_(std::move(graph)), k_(k), colours_(std::move(colours)) {
    if (k_ < 1) throw std::invalid_argument("colouring: colour count must be >= 1");
    if (colours_.size() != static_cast<std::size_t>(graph_.edge_count()))
        throw std::invalid_argument("colouring: need exactly one colour per edge");
    for (int c : colours_)
        if (c < 1 || c > k_)
            throw std::invalid_argument("colouring: colour " + std::to_string(c) +
                                        " out of range 1.." + std::to_string(k_));
}

int EdgeColouring::colour_at(int edge_idx) const {
    if (edge_idx < 0 || edge_idx >= graph_.edge_count())
        throw std::invalid_argument("colouring: edge index out of range");
    return colours_[static_cast<std::size_t>(edge_idx)];
}

int EdgeColouring::colour_of(int u, int v) const {
    const int idx = graph_.edge_index(u, v);
    if (idx < 0)
        throw std::invalid_argument("colouring: no edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    return colours_[static_cast<std::size_t>(idx)];
}

Graph EdgeColouring::colour_class(int colour) const {
    if (colour < 1 || colour > k_)
        throw std::invalid_argument("colour_class: colour " + std::to_string(colour) +
                                    " out of range 1.." + std::to_string(k_));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < colours_.size(); ++i)
        if (colours_[i] == colour) edges.push_back(graph_.edges()[i]);
    return Graph(graph_.vertex_count(), edges);
}

CliqueProfile::CliqueProfile(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("profile: needs at least one clique size");
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (sizes_[i] < 3)
            throw std::invalid_argument("profile: clique sizes must be >= 3, got " +
                                        std::to_string(sizes_[i]));
        if (i > 0 && sizes_[i] < sizes_[i - 1])
            throw std::invalid_argument("profile: clique sizes must be nondecreasing");
    }
}

int CliqueProfile::clique_size(int colour) const {
    if (colour < 1 || colour > colour_count())
        throw std::invalid_argument("profile: colour " + std::to_string(colour) +
                                    " out of range 1.." + std::to_string(colour_count()));
    return sizes_[static_cast<std::size_t>(colour - 1)];
}

EdgeColouring blow_up(const EdgeColouring& base, const std::vector<int>& sizes) {
    const Graph& bg = base.graph();
    const int m = bg.vertex_count();
    if (bg.edge_count() != m * (m - 1) / 2)
        throw std::invalid_argument("blow_up: base graph must be complete");
    if (static_cast<int>(sizes.size()) != m)
        throw std::invalid_argument("blow_up: need one class size per base vertex");
    long long n = 0;
    for (int s : sizes) {
        if (s < 0) throw std::invalid_argument("blow_up: class sizes must be >= 0");
        n += s;
    }
    if (n > kVertexCap)
        throw CapError("blow_up: " + std::to_string(n) + " vertices exceeds the cap of " +
                       std::to_string(kVertexCap));

    // Class j occupies the contiguous label block [prefix[j], prefix[j+1]).
    std::vector<int> cls;
    cls.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < m; ++j)
        cls.insert(cls.end(), static_cast<std::size_t>(sizes[j]), j);

    std::vector<Edge> edges;
    std::vector<int> colours;
    for (int u = 0; u < static_cast<int>(n); ++u)
        for (int v = u + 1; v < static_cast<int>(n); ++v)
            if (cls[u] != cls[v]) {
                edges.emplace_back(u, v);
                colours.push_back(base.colour_of(cls[u], cls[v]));
            }
    return EdgeColouring(Graph(static_cast<int>(n), edges), base.colour_count(),
                         std::move(colours));
}

namespace {

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw ParseError("colouring: line " + std::to_string(line_no) + ": " + msg);
}

} // namespace

EdgeColouring parse_colouring(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, k = -1;
    // Header "n k".
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream hs(line);
        if (!(hs >> n >> k)) fail(line_no, "expected header \"n k\"");
        std::string extra;
        if (hs >> extra) fail(line_no, "trailing token \"" + extra + "\" in header");
        break;
    }
    if (n < 0 || k < 1) {
        if (n == -1) throw ParseError("colouring: empty input, expected header \"n k\"");
        fail(line_no, "header needs n >= 0 and k >= 1");
    }
    if (n > kVertexCap)
        throw CapError("colouring: " + std::to_string(n) + " vertices exceeds the cap of " +
                       std::to_string(kVertexCap));

    std::vector<Edge> edges;
    std::vector<int> colours_by_edge;
    std::vector<std::vector<int>> seen(static_cast<std::size_t>(n));
    for (auto& row : seen) row.assign(static_cast<std::size_t>(n), 0);

    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        long long u, v, c;
        if (!(ls >> u >> v >> c)) fail(line_no, "expected \"u v c\"");
        std::string extra;
        if (ls >> extra) fail(line_no, "trailing token \"" + extra + "\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(line_no, "vertex out of range 0.." + std::to_string(n - 1));
        if (u == v) fail(line_no, "loop at vertex " + std::to_string(u));
        if (c < 1 || c > k) fail(line_no, "colour out of range 1.." + std::to_string(k));
        if (seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
            fail(line_no, "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        colours_by_edge.push_back(static_cast<int>(c));
    }

    // The Graph constructor sorts edges; re-align the colours with it.
    Graph g(static_cast<int>(n), edges);
    std::vector<int> aligned(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        aligned[static_cast<std::size_t>(g.edge_index(edges[i].u, edges[i].v))] =
            colours_by_edge[i];
    return EdgeColouring(std::move(g), static_cast<int>(k), std::move(aligned));
}

EdgeColouring parse_colouring(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_colouring(in);
}

std::string write_colouring(const EdgeColouring& c) {
    std::ostringstream out;
    out << c.graph().vertex_count() << ' ' << c.colour_count() << '\n';
    for (int i = 0; i < c.graph().edge_count(); ++i) {
        const Edge& e = c.graph().edges()[static_cast<std::size_t>(i)];
        out << e.u << ' ' << e.v << ' ' << c.colour_at(i) << '\n';
    }
    return out.str();
}

} // namespace mcd
