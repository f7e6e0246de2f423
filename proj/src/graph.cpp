#include "kpc/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace kpc {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::uint64_t Graph::edge_key(int u, int v) const {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) << 32 | static_cast<std::uint32_t>(v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range: (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ")");
    if (u == v) throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
    if (!edge_keys_.insert(edge_key(u, v)).second)
        throw std::invalid_argument("duplicate edge (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ")");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    return edge_keys_.count(edge_key(u, v)) > 0;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Coloring::colors_used() const {
    std::set<int> distinct(color.begin(), color.end());
    return static_cast<int>(distinct.size());
}

namespace {

void check_coloring(const Graph &g, const Coloring &chi) {
    if (static_cast<int>(chi.color.size()) != g.vertex_count())
        throw std::invalid_argument("coloring does not cover the vertex set");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (chi.color[v] < 1 || chi.color[v] > chi.palette_size)
            throw std::invalid_argument("color out of range [1, palette] at vertex " +
                                        std::to_string(v));
    }
}

}  // namespace

PartialVerdict verify_k_partial(const Graph &g, int k, const Coloring &chi) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    check_coloring(g, chi);
    PartialVerdict verdict;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int need = std::min(k, g.degree(v));
        int differing = 0;
        for (int u : g.neighbors(v))
            if (chi.color[u] != chi.color[v]) ++differing;
        if (differing < need) verdict.violators.push_back(v);
    }
    return verdict;
}

ProperVerdict verify_proper(const Graph &g, const Coloring &chi) {
    check_coloring(g, chi);
    ProperVerdict verdict;
    for (auto [u, v] : g.edges())
        if (chi.color[u] == chi.color[v]) verdict.monochromatic.emplace_back(u, v);
    return verdict;
}

DegeneracyOrder degeneracy_order(const Graph &g) {
    const int n = g.vertex_count();
    DegeneracyOrder result;
    result.order.reserve(n);

    std::vector<int> deg(n);
    std::set<std::pair<int, int>> queue;  // (current degree, vertex)
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<char> removed(n, 0);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        result.degeneracy = std::max(result.degeneracy, d);
        result.order.push_back(v);
        removed[v] = 1;
        for (int u : g.neighbors(v)) {
            if (removed[u]) continue;
            queue.erase({deg[u], u});
            --deg[u];
            queue.emplace(deg[u], u);
        }
    }
    return result;
}

Coloring degeneracy_coloring(const Graph &g) {
    const int n = g.vertex_count();
    const DegeneracyOrder peel = degeneracy_order(g);

    Coloring chi;
    chi.color.assign(n, 0);
    int max_color = 1;
    for (int i = n - 1; i >= 0; --i) {
        const int v = peel.order[i];
        std::vector<char> used(max_color + 2, 0);
        for (int u : g.neighbors(v)) {
            const int c = chi.color[u];
            if (c > 0 && c < static_cast<int>(used.size())) used[c] = 1;
        }
        int c = 1;
        while (used[c]) ++c;
        chi.color[v] = c;
        max_color = std::max(max_color, c);
    }
    chi.palette_size = max_color;
    return chi;
}

Coloring greedy_partial_coloring(const Graph &g, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const int n = g.vertex_count();
    Coloring chi;
    chi.palette_size = k + 1;
    chi.color.assign(n, 1);
    std::vector<char> present(k + 2, 0);
    for (int v = 0; v < n; ++v) {
        std::fill(present.begin(), present.end(), 0);
        int distinct = 0;
        for (int u : g.neighbors(v)) {
            const int c = chi.color[u];
            if (!present[c]) {
                present[c] = 1;
                ++distinct;
            }
        }
        if (distinct <= k) {
            int c = 1;
            while (present[c]) ++c;
            chi.color[v] = c;
        }
    }
    return chi;
}

}  // namespace kpc
