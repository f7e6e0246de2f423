#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kpc/graph.hpp"
#include "kpc/palette.hpp"

namespace kpc {

/// Spanning subgraph in which every edge has an endpoint of degree <= k and
/// every vertex keeps at least min{k, deg_G(v)} incident edges. Any proper
/// coloring of the witness is a k-partial coloring of the source graph.
struct WitnessGraph {
    Graph base;
    int k = 0;
    std::vector<std::pair<int, int>> deletion_log;  // removed edges, in order
};

/// Repeatedly removes the lexicographically smallest edge whose endpoints
/// both currently have degree > k.
WitnessGraph build_witness(const Graph &g, int k);

struct WitnessVerdict {
    // edges whose endpoints both have degree > k (also S-S adjacency)
    std::vector<std::pair<int, int>> bad_edges;
    // vertices with deg_witness < min{k, deg_source}
    std::vector<int> deficient;
    // witness edges absent from the source graph
    std::vector<std::pair<int, int>> not_in_source;
    bool ok() const { return bad_edges.empty() && deficient.empty() && not_in_source.empty(); }
};

WitnessVerdict check_witness(const WitnessGraph &w, const Graph &source);

enum class TwoPhaseOutcome { Success, Phase1Failure, Phase2Failure };

struct TwoPhaseTrace {
    std::vector<int> high_degree;                 // S, ascending
    std::vector<int> color_subset;                // T = {1..max(1, ceil(k/4))}
    std::vector<int> phase1_colors;               // per vertex; 0 where unassigned
    std::vector<std::vector<int>> effective_lists;  // L2(u) ∩ U_u for u outside S
    TwoPhaseOutcome outcome = TwoPhaseOutcome::Phase2Failure;
};

struct TwoPhaseResult {
    std::optional<Coloring> coloring;
    TwoPhaseTrace trace;
};

/// Constructive two-phase proper (k+1)-coloring of a witness from sampled
/// lists. Phase 1 colors the high-degree independent set S from the first
/// s1 entries of each list, restricted to the color prefix T. Phase 2
/// removes the colors S forbids, intersects with the rest of each list, and
/// completes the low-degree remainder by exact search. A returned coloring
/// is verified proper on the witness.
TwoPhaseResult color_witness_two_phase(const WitnessGraph &w, const PaletteLists &lists, int s1);

}  // namespace kpc
