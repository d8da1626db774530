#include "mcd/cliques.hpp"

#include <bit>
#include <limits>

namespace mcd {

int Clique::size() const { return std::popcount(vertex_mask); }

std::vector<int> Clique::vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = vertex_mask; m != 0; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

std::vector<Edge> Clique::edge_pairs() const {
    const std::vector<int> vs = vertices();
    std::vector<Edge> out;
    out.reserve(vs.size() * (vs.size() - 1) / 2);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) out.emplace_back(vs[i], vs[j]);
    return out;
}

bool Clique::is_clique_of(const Graph& g) const {
    const std::vector<int> vs = vertices();
    if (!vs.empty() && vs.back() >= g.vertex_count()) return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

namespace {

// Extends `chosen` (a clique) by vertices from `cands` in ascending order,
// which makes the emission order lexicographic on vertex sets.
void extend(const Graph& g, std::uint64_t chosen, int chosen_count, std::uint64_t cands, int r,
            std::vector<Clique>& out, std::size_t cap) {
    if (chosen_count == r) {
        if (out.size() >= cap)
            throw CapError("clique enumeration: more than " + std::to_string(cap) + " cliques");
        out.push_back(Clique{chosen});
        return;
    }
    while (cands != 0) {
        if (chosen_count + std::popcount(cands) < r) return;
        const int v = std::countr_zero(cands);
        cands &= cands - 1; // remaining candidates are all > v
        extend(g, chosen | (std::uint64_t{1} << v), chosen_count + 1, cands & g.neighbours(v), r,
               out, cap);
    }
}

bool has_clique(const Graph& g, std::uint64_t cands, int need) {
    if (need == 0) return true;
    while (cands != 0) {
        if (std::popcount(cands) < need) return false;
        const int v = std::countr_zero(cands);
        cands &= cands - 1;
        if (has_clique(g, cands & g.neighbours(v), need - 1)) return true;
    }
    return false;
}

} // namespace

std::vector<Clique> enumerate_cliques(const Graph& g, int r) {
    return enumerate_cliques(g, r, std::numeric_limits<std::size_t>::max());
}

std::vector<Clique> enumerate_cliques(const Graph& g, int r, std::size_t cap) {
    if (r < 2) throw std::invalid_argument("enumerate_cliques: r must be >= 2");
    std::vector<Clique> out;
    if (r > g.vertex_count()) return out;
    std::uint64_t all = g.vertex_count() == 64 ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << g.vertex_count()) - 1;
    extend(g, 0, 0, all, r, out, cap);
    return out;
}

bool is_kr_free(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("is_kr_free: r must be >= 2");
    if (r > g.vertex_count()) return true;
    std::uint64_t all = g.vertex_count() == 64 ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << g.vertex_count()) - 1;
    return !has_clique(g, all, r);
}

} // namespace mcd
