#pragma once

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

namespace kpc {

/// Simple undirected graph on vertices [0, n). Self-loops and duplicate
/// edges are rejected at insertion.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>> &edges);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    const std::vector<int> &neighbors(int v) const { return adj_[v]; }
    /// Edges normalized as (min, max), in insertion order.
    const std::vector<std::pair<int, int>> &edges() const { return edges_; }

private:
    std::uint64_t edge_key(int u, int v) const;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::unordered_set<std::uint64_t> edge_keys_;
};

/// Vertex -> color assignment; colors are 1-based and range over [1, palette_size].
struct Coloring {
    std::vector<int> color;
    int palette_size = 0;

    int colors_used() const;
};

struct PartialVerdict {
    std::vector<int> violators;
    bool ok() const { return violators.empty(); }
};

struct ProperVerdict {
    std::vector<std::pair<int, int>> monochromatic;
    bool ok() const { return monochromatic.empty(); }
};

/// Valid iff every vertex v has at least min{k, deg(v)} neighbors with a
/// color different from its own. Throws on a coloring that does not cover
/// the graph or uses colors outside [1, palette_size].
PartialVerdict verify_k_partial(const Graph &g, int k, const Coloring &chi);

/// Valid iff no edge is monochromatic.
ProperVerdict verify_proper(const Graph &g, const Coloring &chi);

struct DegeneracyOrder {
    std::vector<int> order;  // peeling order, first removed first
    int degeneracy = 0;
};

/// Repeated minimum-degree peeling, ties broken by smallest vertex id.
/// The reported degeneracy is the maximum degree seen at removal time.
DegeneracyOrder degeneracy_order(const Graph &g);

/// Proper coloring along the reverse peeling order, first-fit. Uses at most
/// degeneracy(g)+1 colors.
Coloring degeneracy_coloring(const Graph &g);

/// One sequential sweep in increasing vertex id: every vertex starts at
/// color 1 and recolors itself with the smallest color of [1, k+1] absent
/// from its neighborhood whenever fewer than k+1 colors appear there.
/// The result is a k-partial (k+1)-coloring.
Coloring greedy_partial_coloring(const Graph &g, int k);

}  // namespace kpc
