#include "mcd/graph.hpp"

#include <algorithm>
#include <bit>

namespace mcd {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    if (n > kVertexCap)
        throw CapError("graph: " + std::to_string(n) + " vertices exceeds the cap of " +
                       std::to_string(kVertexCap));
    adj_.assign(static_cast<std::size_t>(n), 0);
    edge_index_.assign(static_cast<std::size_t>(n) * n, -1);
}

Graph::Graph(int n, const std::vector<Edge>& edge_list) : Graph(n) {
    std::vector<Edge> sorted = edge_list;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    edges_.reserve(sorted.size());
    for (const Edge& e : sorted) {
        check_vertex(e.u);
        check_vertex(e.v);
        if (e.u == e.v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(e.u));
        adj_[e.u] |= std::uint64_t{1} << e.v;
        adj_[e.v] |= std::uint64_t{1} << e.u;
        edge_index_[static_cast<std::size_t>(e.u) * n_ + e.v] = static_cast<int>(edges_.size());
        edge_index_[static_cast<std::size_t>(e.v) * n_ + e.u] = static_cast<int>(edges_.size());
        edges_.push_back(e);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

std::uint64_t Graph::neighbours(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const { return std::popcount(neighbours(v)); }

int Graph::edge_index(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return edge_index_[static_cast<std::size_t>(u) * n_ + v];
}

Graph Graph::remove_edges(const std::vector<Edge>& removed) const {
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    std::vector<char> drop(edges_.size(), 0);
    for (const Edge& e : removed) {
        int idx = edge_index(e.u, e.v);
        if (idx >= 0) drop[idx] = 1;
    }
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (!drop[i]) kept.push_back(edges_[i]);
    return Graph(n_, kept);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph turan_graph(int n, int parts) {
    if (parts < 1) throw std::invalid_argument("turan_graph: parts must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u % parts != v % parts) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::int64_t turan_number(std::int64_t n, std::int64_t parts) {
    if (n < 0) throw std::invalid_argument("turan_number: negative n");
    if (parts < 1) throw std::invalid_argument("turan_number: parts must be >= 1");
    const std::int64_t q = n / parts;
    const std::int64_t rem = n % parts;
    auto choose2 = [](std::int64_t m) { return m * (m - 1) / 2; };
    return choose2(n) - rem * choose2(q + 1) - (parts - rem) * choose2(q);
}

namespace {

// 6-bit groups, most significant bit first, offset by 63 into printable ASCII.
class BitWriter {
public:
    void push(bool bit) {
        cur_ = (cur_ << 1) | (bit ? 1 : 0);
        if (++filled_ == 6) flush_group();
    }
    std::string finish() {
        if (filled_ > 0) {
            cur_ <<= (6 - filled_);
            filled_ = 6;
            flush_group();
        }
        return out_;
    }

private:
    void flush_group() {
        out_.push_back(static_cast<char>(cur_ + 63));
        cur_ = 0;
        filled_ = 0;
    }
    std::string out_;
    int cur_ = 0;
    int filled_ = 0;
};

class BitReader {
public:
    BitReader(std::string_view text, std::size_t pos) : text_(text), pos_(pos) {}

    bool next() {
        if (filled_ == 0) {
            if (pos_ >= text_.size())
                throw ParseError("graph6: truncated bit vector at byte " + std::to_string(pos_));
            const unsigned char c = static_cast<unsigned char>(text_[pos_]);
            if (c < 63 || c > 126)
                throw ParseError("graph6: invalid byte " + std::to_string(int(c)) + " at position " +
                                 std::to_string(pos_));
            cur_ = c - 63;
            filled_ = 6;
            ++pos_;
        }
        --filled_;
        return (cur_ >> filled_) & 1;
    }

    std::size_t position() const { return pos_; }
    bool padding_clean() const { return filled_ == 0 || (cur_ & ((1 << filled_) - 1)) == 0; }

private:
    std::string_view text_;
    std::size_t pos_;
    int cur_ = 0;
    int filled_ = 0;
};

} // namespace

Graph parse_graph6(std::string_view text) {
    // Tolerate the optional header and a trailing newline.
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");

    std::size_t pos = 0;
    int n = 0;
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) {
        // Long form: '~' then three bytes carrying an 18-bit n.
        if (text.size() < 4) throw ParseError("graph6: truncated long-form header");
        if (static_cast<unsigned char>(text[1]) == 126)
            throw ParseError("graph6: 36-bit vertex counts exceed the vertex cap");
        long long big = 0;
        for (int i = 1; i <= 3; ++i) {
            const unsigned char c = static_cast<unsigned char>(text[i]);
            if (c < 63 || c > 126)
                throw ParseError("graph6: invalid header byte at position " + std::to_string(i));
            big = (big << 6) | (c - 63);
        }
        if (big > kVertexCap)
            throw CapError("graph6: " + std::to_string(big) + " vertices exceeds the cap of " +
                           std::to_string(kVertexCap));
        n = static_cast<int>(big);
        pos = 4;
    } else {
        if (c0 < 63 || c0 > 125)
            throw ParseError("graph6: invalid header byte " + std::to_string(int(c0)));
        n = c0 - 63;
        pos = 1;
    }

    BitReader bits(text, pos);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (bits.next()) edges.emplace_back(u, v);
    if (bits.position() != text.size())
        throw ParseError("graph6: trailing bytes after position " + std::to_string(bits.position()));
    if (!bits.padding_clean()) throw ParseError("graph6: nonzero padding bits");
    return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    BitWriter bits;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push(g.has_edge(u, v));
    out += bits.finish();
    return out;
}

} // namespace mcd
