#include "kpc/demand.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace kpc {

void DemandInstance::validate() const {
    const int n = h.vertex_count();
    if (static_cast<int>(lists.size()) != n || static_cast<int>(demand.size()) != n)
        throw std::invalid_argument("instance arrays do not match the vertex count");
    if (k < 1) throw std::invalid_argument("palette parameter must be positive");
    for (int v = 0; v < n; ++v) {
        if (demand[v] < 0) throw std::invalid_argument("negative demand at vertex " + std::to_string(v));
        if (demand[v] > h.degree(v))
            throw std::invalid_argument("demand exceeds stored degree at vertex " + std::to_string(v));
        if (demand[v] > palette_size())
            throw std::invalid_argument("demand exceeds palette size at vertex " + std::to_string(v));
        for (int c : lists[v])
            if (c < 1 || c > palette_size())
                throw std::invalid_argument("list color out of palette at vertex " + std::to_string(v));
    }
}

bool satisfies_instance(const DemandInstance &inst, const Coloring &chi) {
    const int n = inst.h.vertex_count();
    if (static_cast<int>(chi.color.size()) != n) return false;
    for (int v = 0; v < n; ++v) {
        const int c = chi.color[v];
        if (!std::binary_search(inst.lists[v].begin(), inst.lists[v].end(), c)) return false;
        int differing = 0;
        for (int u : inst.h.neighbors(v))
            if (chi.color[u] != c) ++differing;
        if (differing < inst.demand[v]) return false;
    }
    return true;
}

void write_demand_instance(std::ostream &out, const DemandInstance &inst) {
    const int n = inst.h.vertex_count();
    out << n << ' ' << inst.k << '\n';
    for (int v = 0; v < n; ++v) {
        out << v << ' ' << inst.demand[v] << ' ' << inst.lists[v].size();
        for (int c : inst.lists[v]) out << ' ' << c;
        out << '\n';
    }
    out << inst.h.edge_count() << '\n';
    for (auto [u, v] : inst.h.edges()) out << u << ' ' << v << '\n';
}

DemandInstance read_demand_instance(std::istream &in) {
    DemandInstance inst;
    int n = 0;
    if (!(in >> n >> inst.k)) throw std::invalid_argument("malformed instance header");
    inst.h = Graph(n);
    inst.lists.resize(n);
    inst.demand.resize(n);
    for (int i = 0; i < n; ++i) {
        int v = 0, d = 0, len = 0;
        if (!(in >> v >> d >> len) || v < 0 || v >= n || len < 0)
            throw std::invalid_argument("malformed vertex line in instance");
        inst.demand[v] = d;
        inst.lists[v].resize(len);
        for (int j = 0; j < len; ++j)
            if (!(in >> inst.lists[v][j])) throw std::invalid_argument("malformed color list");
        std::sort(inst.lists[v].begin(), inst.lists[v].end());
        inst.lists[v].erase(std::unique(inst.lists[v].begin(), inst.lists[v].end()),
                            inst.lists[v].end());
    }
    int m = 0;
    if (!(in >> m) || m < 0) throw std::invalid_argument("malformed edge count");
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("malformed edge line");
        inst.h.add_edge(u, v);
    }
    return inst;
}

}  // namespace kpc
