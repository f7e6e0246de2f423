#pragma once

#include <iosfwd>
#include <vector>

#include "kpc/graph.hpp"

namespace kpc {

/// Demand-partial list coloring instance: find chi with chi(v) in lists[v]
/// and at least demand[v] neighbors of v in h colored differently from v.
/// Properness on h is not required. The palette is [1, k+1].
struct DemandInstance {
    Graph h;
    std::vector<std::vector<int>> lists;  // sorted distinct colors per vertex
    std::vector<int> demand;
    int k = 0;

    int palette_size() const { return k + 1; }

    /// Throws if demand(v) > deg_h(v), demand(v) > palette size, demands are
    /// negative, or a list color falls outside [1, k+1].
    void validate() const;
};

/// Plain-text round-trip format:
///   line 1: "n k"
///   next n lines: "v demand |L| c1 ... c|L|"
///   then: "m" followed by m lines "u v"
void write_demand_instance(std::ostream &out, const DemandInstance &inst);
DemandInstance read_demand_instance(std::istream &in);

/// True iff chi is list-respecting and meets every vertex demand.
bool satisfies_instance(const DemandInstance &inst, const Coloring &chi);

}  // namespace kpc
