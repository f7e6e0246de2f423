#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kpc/io.hpp"
#include "kpc/solver.hpp"
#include "kpc/stream.hpp"

namespace kpc {

struct TrialConfig {
    // Stream source: a fixed stream, or one generated per trial from the
    // trial seed when `fixed` is empty.
    std::optional<StreamFileData> fixed;
    int n = 0;
    int k = 0;
    double avg_deg = 0.0;
    StreamOrder order = StreamOrder::Random;

    int s = 0;  // 0 = default_list_length
    double fallback_threshold = 1.0;
    SolverConfig solver;
    int trials = 1;
    int parallelism = 0;  // 0 = hardware concurrency
    std::uint64_t root_seed = 1;
};

struct TrialRow {
    std::uint64_t seed = 0;
    bool success = false;   // solver produced a coloring
    bool verified = false;  // coloring is k-partial on the full input
    int colors_used = 0;
    bool fallback = false;
    MemoryReport memory;
    long solver_nodes = 0;
    bool fast_path = false;
    double wall_ms = 0.0;
};

struct TrialReport {
    TrialConfig config;
    std::vector<TrialRow> rows;
    double success_rate = 0.0;  // fraction of trials that verified
    long max_h_edges = 0;
    double wall_ms = 0.0;
};

/// Runs the one-pass engine once per trial seed and verifies each output
/// against the fully retained input graph (the engine itself never sees
/// it). Trials are independent and may run in parallel; rows are ordered
/// by trial index, so reports are deterministic per config.
TrialReport run_trials(const TrialConfig &cfg);

std::string report_to_json(const TrialReport &report);

}  // namespace kpc
