#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kpc/demand.hpp"
#include "kpc/graph.hpp"
#include "kpc/palette.hpp"
#include "kpc/solver.hpp"

namespace kpc {

enum class EdgeDisposition { RejectedByFilter, Freed, StoredInH };

// Memory accounting is in 64-bit words. peak_state_words is the budget
// formula c0*n + |E(H)| + n*s with c0 = kStateWordsPerVertex: two counter
// words per vertex (deg, free) plus one word amortizing the fixed scalars.
// measured_state_words is what the engine actually holds and must stay
// below the formula.
inline constexpr long kStateWordsPerVertex = 3;

struct MemoryReport {
    long edges_seen = 0;
    long edges_rejected = 0;
    long edges_freed = 0;
    long edges_stored = 0;
    long peak_state_words = 0;
    long measured_state_words = 0;
};

/// One-pass engine state: degree and free counters, the sampled palettes,
/// and the stored subgraph H. Invariant maintained on every accepted edge:
/// free(v) + deg_H(v) = deg(v).
///
/// Before both counters of an edge reach k the edge passes the filter; a
/// passing edge with disjoint lists is freed (counted, not stored), any
/// other passing edge goes to H. In fallback mode (small palettes, where
/// k+1 <= threshold * s^2) sparsification is bypassed and H is exactly the
/// filtered graph.
class StreamState {
public:
    StreamState(int n, int k, int s, std::uint64_t seed, double fallback_threshold = 1.0);
    /// Injected lists, for reproducibility audits and tests.
    StreamState(int n, int k, PaletteLists lists, double fallback_threshold = 1.0);

    EdgeDisposition process_edge(int u, int v);
    DemandInstance finalize() const;
    MemoryReport memory_report() const;

    int vertex_count() const { return n_; }
    int k() const { return k_; }
    bool fallback() const { return fallback_; }
    long edges_seen() const { return seen_; }
    int degree_counter(int v) const { return deg_[v]; }
    int free_counter(int v) const { return free_[v]; }
    int h_degree(int v) const { return h_deg_[v]; }
    const std::vector<std::pair<int, int>> &stored_edges() const { return h_edges_; }
    const PaletteLists &lists() const { return lists_; }

    /// Canonical little-endian encoding of the full state; bit-exact for a
    /// given seed. The byte count is the one-way communication measure.
    std::vector<std::uint8_t> serialize() const;
    static StreamState deserialize(const std::vector<std::uint8_t> &bytes);

private:
    StreamState() = default;

    int n_ = 0;
    int k_ = 0;
    bool fallback_ = false;
    long seen_ = 0;
    long rejected_ = 0;
    long freed_edges_ = 0;
    std::vector<int> deg_;
    std::vector<int> free_;
    std::vector<int> h_deg_;
    std::vector<std::pair<int, int>> h_edges_;
    PaletteLists lists_;
};

struct RunConfig {
    int n = 0;
    int k = 0;
    int s = 0;  // 0 = default_list_length(n, k)
    std::uint64_t seed = 1;
    double fallback_threshold = 1.0;
    SolverConfig solver;
};

struct RunResult {
    SolveStatus status = SolveStatus::LimitExhausted;
    std::optional<Coloring> coloring;  // respects the sampled lists when set
    MemoryReport memory;
    long solver_nodes = 0;
    bool fast_path_used = false;
    bool fallback = false;
};

/// Full pipeline: filter + sparsify each edge, compute demands, hand the
/// instance to the solver. A missing coloring is reported through `status`,
/// never silently mis-colored.
RunResult run_stream(const std::vector<std::pair<int, int>> &edges, const RunConfig &cfg);

}  // namespace kpc
